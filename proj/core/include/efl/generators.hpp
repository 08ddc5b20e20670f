#pragma once
// Instance generators: structured extremal families, seeded random linear
// hypergraphs, near-regular uniform instances, and the embedding that makes
// an instance r-uniform while trapping every degree in a window [D-C, D].

#include "efl/types.hpp"

#include <cstdint>

namespace efl {

// Discrete distribution over edge sizes for random-linear generation.
struct SizeLaw {
  std::vector<std::pair<int, double>> weights;  // (size, weight), size >= 2
};

// Projective plane of prime order q: n = q^2+q+1 points, same number of
// lines of size q+1, every point pair on exactly one line.
LinearHypergraph projective_plane(int q);

// Degenerate plane: n-1 pairs {0,v} plus the edge {1,...,n-1}.
LinearHypergraph degenerate_plane(int n);

// Complete graph K_n as a 2-uniform linear hypergraph.
LinearHypergraph complete_graph(int n);

// Greedy random insertion honoring linearity; stops at m edges or after
// 50*m rejected attempts, whichever comes first.
LinearHypergraph random_linear(int n, const SizeLaw& law, int m, uint64_t seed);

// r-uniform linear instance with every degree in [(1-kappa)D, (1+kappa)D].
// Throws DegreeSpreadUnreachable (reporting the achieved spread) when the
// bounded greedy cannot reach the window.
struct DegreeSpread {
  int min_deg = 0;
  int max_deg = 0;
};
LinearHypergraph uniform_near_regular(int n, int r, int D, double kappa,
                                      uint64_t seed, DegreeSpread* spread = nullptr);

// Embedding into an r-uniform linear hypergraph:
//  (E1) restricted to V(H), the result equals H up to singleton edges;
//  (E2) all degrees land in [D-C, D]; degrees already >= D-C are preserved;
//  (E3) the result has at most r (r-1)^2 D^3 v(H) vertices.
struct EmbedResult {
  LinearHypergraph H_unif;
  // Original vertex v keeps id v.  Edge i of H corresponds to edge i of
  // H_unif (the padded version).
  int copies = 1;          // disjoint copies of the padded instance used
  int base_vertices = 0;   // vertices per copy
  int achieved_slack = 0;  // max over vertices of D - d(v) in the output
};
EmbedResult embed_uniform(const LinearHypergraph& H, int r, int D, int C);

}  // namespace efl
