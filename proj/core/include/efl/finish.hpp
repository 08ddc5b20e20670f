#pragma once
// Graph-edge finishing: Vizing fan coloring, the Hall-based forbidden-list
// colorer, maximum-degree edge coloring for near-regular dense graphs, and
// the exact chromatic-index oracle used to certify small cases.

#include "efl/matching.hpp"
#include "efl/types.hpp"

#include <cstdint>

namespace efl {

// Proper edge coloring with at most Delta(G)+1 colors (fan/Kempe-chain
// recoloring).  When at most two vertices attain Delta, a Delta-color
// attempt is made first.  Colors are 0-based; palette_size is the number of
// colors actually permitted.
EdgeColoring vizing(const SimpleGraph& G);

// Attempts a proper coloring with exactly `q` colors via the same fan
// machinery; returns empty optional when the attempt gets stuck.
std::optional<EdgeColoring> vizing_with_palette(const SimpleGraph& G, int q,
                                                uint64_t order_seed);

// Hall-based finishing: colors E(H) from palette {0..palette-1} avoiding
// forbidden[v] at every endpoint.  `U` must dominate all edges.  Verifies
// hypotheses (i)-(iv) with parameter delta, then colors star-by-star via
// minimum-degree bipartite matchings.
EdgeColoring hall_finish(const SimpleGraph& H, int palette,
                         const std::vector<std::vector<Color>>& forbidden,
                         const std::vector<int>& U, double delta);

struct DeltaColorResult {
  bool applicable = false;  // hypotheses held and Delta colors were achieved
  EdgeColoring col;         // Delta colors when applicable, else Delta+1
  int max_degree = 0;
};

// Maximum-degree edge coloring for graphs with many non-maximum-degree
// vertices and sampled lower (p, eps_reg)-regularity; falls back to a
// Delta+1 coloring (applicable=false) when out of scope.
DeltaColorResult delta_edge_color(const SimpleGraph& G, double p,
                                  double eps_reg, uint64_t seed);

// DSATUR vertex coloring of an adjacency structure; returns (colors used,
// per-vertex assignment).
std::pair<int, std::vector<int>> dsatur_color(const std::vector<std::vector<int>>& adj);

struct ExactResult {
  int chi = 0;
  EdgeColoring col;
};

// Exact chromatic index by branch-and-bound on the line graph with a
// per-vertex-star clique lower bound and a DSATUR upper bound.
// Throws BudgetExceeded (with best bounds in the message) when the instance
// exceeds `edge_limit` or the node budget.
ExactResult exact_chromatic_index(const LinearHypergraph& H, int edge_limit = 24,
                                  int64_t node_budget = 40'000'000);

}  // namespace efl
