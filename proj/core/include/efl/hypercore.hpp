#pragma once
// Derived structures and predicates on linear hypergraphs: the two-graph,
// high-degree vertex set, line graph, normalized volume, size classes,
// coloring verification, matching-coverage reports, and the fullness test.

#include "efl/types.hpp"

#include <optional>
#include <string>

namespace efl {

// The graph part of H (size-2 edges), the high-degree set U, and the
// crossing subgraph G' (graph edges incident to U).
struct DerivedViews {
  std::vector<EdgeId> graph_edges;   // ids of size-2 edges of H (this is G)
  std::vector<int> graph_degree;     // d_G(v), indexed by vertex
  std::vector<Vertex> U;             // { v : d_G(v) >= (1-eps) n }, sorted
  std::vector<char> in_U;            // indicator over vertices
  std::vector<EdgeId> crossing_edges;  // G-edges incident to U (this is G')
};

DerivedViews derived_views(const LinearHypergraph& H, double eps);

// Line graph adjacency: vertices are edge ids of H; two edge ids are
// adjacent iff the edges intersect.
std::vector<std::vector<EdgeId>> line_graph(const LinearHypergraph& H);

// Normalized volume of an edge subset: sum of C(|e|,2) / C(n,2).
double volume(const LinearHypergraph& H, const std::vector<EdgeId>& W);
double volume_all(const LinearHypergraph& H);

// Size classes and flags per the Hierarchy thresholds; also asserts the
// count bound |{e : |e| >= alpha n}| <= 2/alpha at alpha = beta/4.
EdgeClass classify(const LinearHypergraph& H, const Hierarchy& hier);

// Returns std::nullopt when `col` is proper, otherwise the first
// intersecting same-colored edge pair.  Throws Uncolored if an edge has no
// color, BadColor if a color falls outside the palette.
std::optional<std::pair<EdgeId, EdgeId>> verify_coloring(const LinearHypergraph& H,
                                                         const EdgeColoring& col);

// Coverage of U by a family of matchings with permitted defect set S.
// Throws NotAMatching(i) when matching i has intersecting edges.
CoverageReport coverage(const LinearHypergraph& H,
                        const std::vector<std::vector<EdgeId>>& matchings,
                        const std::vector<Vertex>& U, const std::vector<Vertex>& S);

// (rho,eps)-fullness: |{u : d_G(u) >= (1-eps)n}| >= (1-10 eps)n and
// |{v : d_G(v) = n-1}| >= (rho-15 eps)n.
struct FullnessReport {
  bool full = false;
  int near_full_count = 0;  // d_G >= (1-eps) n
  int exact_full_count = 0; // d_G == n-1
};
FullnessReport is_full(const LinearHypergraph& H, double rho, double eps);

// --- I/O -------------------------------------------------------------------
// Text instance format (.lhg):  "n <N>" then one "e v1 v2 ... vk" per edge;
// '#' starts a comment.  Colorings are JSON {palette_size, colors:[...]}.
std::string to_lhg(const LinearHypergraph& H);
LinearHypergraph from_lhg(const std::string& text);
std::string coloring_to_json(const EdgeColoring& col);
EdgeColoring coloring_from_json(const std::string& text);

}  // namespace efl
