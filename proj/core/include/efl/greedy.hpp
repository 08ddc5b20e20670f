#pragma once

#include <optional>
#include <vector>

#include "efl/ordering.hpp"
#include "efl/types.hpp"

namespace efl {

// Per-edge allowed-color sets over a shared palette [0, palette_size).
struct ListAssignment {
  int palette_size = 0;
  std::vector<std::vector<Color>> allowed;  // one sorted list per edge

  static ListAssignment full(int m, int palette) {
    ListAssignment la;
    la.palette_size = palette;
    la.allowed.assign(m, {});
    for (auto& v : la.allowed) {
      v.resize(palette);
      for (Color c = 0; c < palette; ++c) v[c] = c;
    }
    return la;
  }
};

// Result of the large/medium coloring stage.
struct LargeEdgeResult {
  enum class Type { A, B };
  Type type = Type::A;
  EdgeColoring col;
  std::vector<Color> c_med;        // colors reserved for medium edges
  std::vector<Color> huge_colors;  // colors used exclusively by huge edges
  std::vector<int> cover_size;     // vertices covered per color class
  double fpp_volume = 0.0;         // volume carried by near-sqrt(n) edges
  bool budget_ok = false;          // palette within the type's target budget
  bool side_conditions_ok = false; // per-type structural scan passed
};

// Order-driven list coloring of the line graph: each edge takes the least
// allowed color not used by an earlier intersecting edge, and a color may be
// shared only while its class covers fewer than alpha2*n vertices.  Throws
// ListExhausted when an edge runs out of allowed colors (its list was smaller
// than fwddeg + alpha1*n slack).
EdgeColoring list_greedy(const LinearHypergraph& H, const EdgeOrdering& ord,
                         const ListAssignment& lists, double alpha1,
                         double alpha2);

// Refines a proper coloring into an alpha-bounded one: every color class is
// either a single edge or covers at most alpha*n vertices.  Each new class is
// a subset of an old class; palette grows by at most ~2n/(alpha^2 r) when all
// edges have size >= r+1.
EdgeColoring split_bounded(const LinearHypergraph& H, const EdgeColoring& col,
                           double alpha, int r);

// Colors a hypergraph whose edges all have size in (r1, r0], producing a
// gamma-bounded proper coloring; throws BudgetExceeded when the gamma*n
// palette bound fails despite the degree hypothesis holding.
EdgeColoring color_medium(const LinearHypergraph& H, double gamma, int r0,
                          int r1);

// DSATUR on the line graph of H.
EdgeColoring dsatur_line(const LinearHypergraph& H);
// DSATUR on an explicit adjacency structure.
std::vector<Color> dsatur_color_adj(const std::vector<std::vector<int>>& adj);

// Colors an instance whose edges all exceed r1 in size.  Routes between the
// near-extremal pairing colorer (Type B: <= n colors, classes of size <= 2)
// and the ordered-greedy cascade (Type A: huge edges get exclusive colors,
// medium edges a reserved bounded palette, remaining large edges a
// cover-capped greedy).  Always returns a proper coloring; budget misses are
// reported through the flags, not fatal.
LargeEdgeResult color_large_medium(const LinearHypergraph& H,
                                   const Hierarchy& h, uint64_t seed);

}  // namespace efl
