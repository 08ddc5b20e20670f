#pragma once
// Matching engines: bipartite Hall matchings with violator certificates,
// dense perfect matchings via random balanced bipartition, minimum-degree
// bipartite matchings, and degree-window (g,f)-factors.

#include "efl/types.hpp"

#include <cstdint>
#include <optional>

namespace efl {

// Bipartite graph as adjacency from A-side (0..|A|-1) into B-side ids.
struct BipartiteGraph {
  int a_size = 0;
  int b_size = 0;
  std::vector<std::vector<int>> adj;  // per A-vertex, sorted B ids
};

struct HallResult {
  // match_a[a] = matched B vertex or -1.  Covers A iff violator empty.
  std::vector<int> match_a;
  // Nonempty iff no matching covers A; then |N(violator)| < |violator|.
  std::vector<int> violator;
};

HallResult hall_bipartite(const BipartiteGraph& G);

// Matching covering A under the crossing hypotheses; degenerates to the
// plain Hall engine (and reports via `used_fallback`) when they fail.
std::vector<int> crossing_match(const BipartiteGraph& G, double rho, double xi,
                                int n_ambient, bool* used_fallback = nullptr);

// Simple undirected graph on [0, n) as an edge list.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Perfect matching of a dense graph by random balanced bipartition + Hall,
// retried with fresh randomness; exhaustive fallback for n <= 20.
// Returns vertex pairs.  Throws RetriesExhausted / NoPerfectMatching.
// Maximum matching in an arbitrary graph (blossom contraction).  Returns
// match[v] = partner or -1.
std::vector<int> general_max_matching(int n,
                                      const std::vector<std::pair<int, int>>& edges);

std::vector<std::pair<int, int>> dense_perfect_match(const SimpleGraph& G,
                                                     int retries, uint64_t seed);

// Matching covering A when |A| <= |B| and delta_A + delta_B >= |A|.
// Throws PreconditionUnmet when the degree hypothesis fails, MatchFailed if
// the (guaranteed) matching is not found.
std::vector<int> min_deg_bipartite_match(const BipartiteGraph& G);

// Degree-window subgraph: F with g(v) <= d_F(v) <= f(v) for all v.
// Primary path: flow with lower bounds on the bipartite double cover, then
// parity rounding and alternating-walk repair; exhaustive fallback for small
// graphs.  Throws Infeasible when no factor exists.
std::vector<std::pair<int, int>> gf_factor(const SimpleGraph& G,
                                           const std::vector<int>& g,
                                           const std::vector<int>& f);

// Exhaustive feasibility check used as the test oracle (small graphs only).
std::optional<std::vector<std::pair<int, int>>> gf_factor_exhaustive(
    const SimpleGraph& G, const std::vector<int>& g, const std::vector<int>& f);

}  // namespace efl
