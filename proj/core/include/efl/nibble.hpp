#pragma once

#include <vector>

#include "efl/absorb.hpp"
#include "efl/types.hpp"

namespace efl {

// Per-family coverage statistic recorded by the randomized matching builders.
struct FamilyStat {
  int family_index = -1;
  int size = 0;
  int uncovered = 0;
  double uncovered_fraction = 0;
  bool in_window = false;  // |S \ V(M)| within (gamma +- 4 kappa)|S|
};

struct PseudorandomResult {
  std::vector<EdgeId> matching;
  std::vector<FamilyStat> stats;
  bool all_in_window = false;
  int attempts = 1;
};

// Random-order greedy maximal matching followed by gamma-sparsification
// (every kept edge dropped independently with probability gamma).  The
// uncovered fraction of each family set with |S| >= D^(1/20) is validated
// against (gamma +- 4 kappa)|S|, retrying with derived seeds up to
// retry_cap; in strict mode a final miss raises StatMiss.
PseudorandomResult pseudorandom_matching(
    const LinearHypergraph& H_unif, double gamma, double kappa,
    const std::vector<std::vector<Vertex>>& families, uint64_t seed,
    int retry_cap = 10, bool strict = false);

struct NibbleResult {
  std::vector<std::vector<EdgeId>> matchings;  // N_1..N_D
  // Diagnostics: per-matching uncovered fraction of V, and the leftover
  // fraction per checked edge set.
  std::vector<double> uncovered_fraction;
  double leftover_fraction = 0;  // edges of H' in no matching
  bool containment_ok = false;   // N_i contains M_i, additions inside H'
};

// Distributes the regularized small-edge hypergraph H' over the D
// pre-colored matchings: round for round, each matching is greedily extended
// to a maximal matching with unused H'-edges (random order), then its
// additions are gamma-sparsified.  Containment and disjointness are asserted
// exactly; the statistical windows are reported, and raise StatMiss only in
// strict mode.
NibbleResult nibble_color(const LinearHypergraph& H,
                          const LinearHypergraph& Hp,
                          const std::vector<std::vector<EdgeId>>& M,
                          double gamma, double kappa, uint64_t seed,
                          bool strict = false);

// Full main-stage coloring: K = ceil(1/kappa) rounds, each taking a slice of
// the matchings, running the nibble extension, then absorbing so the
// high-degree set is covered.  Throws RoundFailed(k) with the stage error.
std::vector<std::vector<EdgeId>> main_color(
    const LinearHypergraph& H, const Hierarchy& h, const Reservoir& R,
    const std::vector<Vertex>& S, const std::vector<std::vector<EdgeId>>& M,
    uint64_t seed);

// Leftover stage: assigns every edge of H_rem a color from C avoiding its
// conflict list (colors whose matching touches the edge) while keeping each
// class below gamma n / 2 vertices, then extends classes over the reservoir.
// Returns one matching per color of C, aligned with the input order.
std::vector<std::vector<EdgeId>> leftover_color(
    const LinearHypergraph& H, const std::vector<int>& C,
    const std::vector<std::vector<EdgeId>>& Mc, const Reservoir& R,
    const std::vector<EdgeId>& H_rem, const std::vector<Vertex>& S,
    const AbsorbParams& p, uint64_t seed);

}  // namespace efl
