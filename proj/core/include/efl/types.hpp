#pragma once
// Core value types shared by every module: hypergraphs, colorings,
// the constant ladder, and small utility containers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace efl {

using Vertex = int;
using EdgeId = int;
using Color = int;
using Edge = std::vector<Vertex>;  // sorted, unique vertex ids

// All recoverable failures are reported as exceptions carrying a stable
// machine-readable kind plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Deterministic RNG used everywhere; seeds are always explicit.
using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// LinearHypergraph: n vertices (ids 0..n-1) plus a list of edges, each a
// sorted set of vertex ids.  Any two distinct edges of size >= 2 intersect in
// at most one vertex.  Multi-singleton mode permits repeated singletons.
// ---------------------------------------------------------------------------
struct LinearHypergraph {
  int n = 0;
  std::vector<Edge> edges;
  bool multi_singletons = false;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int edge_size(EdgeId e) const { return static_cast<int>(edges[e].size()); }

  // vertex -> incident edge ids (built once by build()).
  std::vector<std::vector<EdgeId>> incidence;

  int degree(Vertex v) const { return static_cast<int>(incidence[v].size()); }

  void rebuild_incidence() {
    incidence.assign(n, {});
    for (EdgeId e = 0; e < edge_count(); ++e)
      for (Vertex v : edges[e]) incidence[v].push_back(e);
  }
};

// Builds and validates a linear hypergraph.  Throws:
//   BadVertexId, DuplicateEdge, LinearityViolation.
LinearHypergraph build(int n, std::vector<Edge> edges, bool multi_singletons = false);

// ---------------------------------------------------------------------------
// EdgeColoring: per-edge color ids over a palette {0,...,palette_size-1}.
// kUncolored marks edges not yet assigned.
// ---------------------------------------------------------------------------
inline constexpr Color kUncolored = -1;

struct EdgeColoring {
  std::vector<Color> color;  // indexed by edge id
  int palette_size = 0;

  int colors_used() const {
    std::vector<char> seen(palette_size, 0);
    int k = 0;
    for (Color c : color)
      if (c != kUncolored && !seen[c]) { seen[c] = 1; ++k; }
    return k;
  }
};

// ---------------------------------------------------------------------------
// Hierarchy: the validated constant ladder
//   xi < 1/r1 < beta < kappa < gamma1 < eps1 < rho1 < sigma < delta
//      < gamma2 < rho2 < eps2,   and 1/r0 < xi.
// ---------------------------------------------------------------------------
struct Hierarchy {
  double xi = 0.005;
  int r1 = 16;
  int r0 = 256;
  double beta = 0.008;
  double kappa = 0.012;
  double gamma1 = 0.02;
  double eps1 = 0.04;
  double rho1 = 0.08;
  double sigma = 0.12;
  double delta = 0.16;
  double gamma2 = 0.22;
  double rho2 = 0.3;
  double eps2 = 0.4;

  void validate() const {
    auto chain = {xi,   beta,  kappa, gamma1, eps1, 1.0 / r1,
                  rho1, sigma, delta, gamma2, rho2, eps2};
    double prev = 0.0;
    for (double x : chain) {
      if (!(prev < x && x < 1.0))
        throw Error("BadHierarchy", "constant ladder is not strictly increasing in (0,1)");
      prev = x;
    }
    if (!(1.0 / r0 < xi))
      throw Error("BadHierarchy", "1/r0 must be below xi");
  }

  static Hierarchy desk_default() { return Hierarchy{}; }
};

// Edge classification per the size thresholds in the Hierarchy.
enum class SizeClass : uint8_t { Small, Medium, Large };

struct EdgeClass {
  std::vector<SizeClass> size_class;  // per edge
  std::vector<char> fpp_extremal;     // |e| = (1 +- delta) sqrt(n)
  std::vector<char> huge;             // |e| >= beta*n/4
};

// Coverage status of a family of matchings w.r.t. a target vertex set U and
// a permitted defect set S.
enum class CoverageStatus : uint8_t { Perfect, NearlyPerfect, Neither };

struct CoverageReport {
  CoverageStatus status = CoverageStatus::Neither;
  // matching index -> the single uncovered U-vertex (only when NearlyPerfect).
  std::vector<std::pair<int, Vertex>> defects;
  // per-U-vertex miss counts, keyed by vertex id.
  std::vector<std::pair<Vertex, int>> miss_counts;
};

// ---------------------------------------------------------------------------
// Small dynamic bitset used for fast set operations at desk scale.
// ---------------------------------------------------------------------------
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= (1ull << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int size() const { return n_; }
  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  int count_and(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
    return c;
  }
  int count_andnot(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & ~o.w_[i]);
    return c;
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace efl
