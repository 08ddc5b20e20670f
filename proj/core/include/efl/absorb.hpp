#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "efl/types.hpp"

namespace efl {

// A reserved set of size-2 edges of H (identified by edge id), together with
// the parameters it was built for and its post-hoc certificates.
struct Reservoir {
  enum class Kind { A1, A2, B };
  Kind kind = Kind::A1;
  std::vector<EdgeId> edges;  // ids of size-2 edges of H
  double rho = 0, xi = 0, eps = 0;
  // Certificates recorded at construction time.
  double degree_residual = 0;   // worst |d_R(v) - rho d_G(v)|
  double typicality_residual = 0;
  bool degree_window_ok = false;
};

// Certificate for the typicality + sampled-regularity absorber test.
struct AbsorberCert {
  double typicality_max_residual = 0;  // worst |.| over family x vertices
  double regularity_worst_margin = 0;  // worst sampled e_R(S,T) excess
  bool containment = false;            // R lies inside the crossing graph G'
  bool certified = false;              // residual <= gamma*n and containment
};

// Parameters shared by the absorption extensions.
struct AbsorbParams {
  double rho = 0.3;
  double gamma = 0.05;
  double kappa = 0.012;
  double eps = 0.04;
  double xi = 0.005;
  double typicality_slack = -1;  // absorber slack; < 0 means 10*gamma
};

// Random reservoir: every size-2 edge kept independently with probability
// rho.  Degree window d_R(v) = rho d_G(v) +- xi n validated post hoc,
// retrying with derived seeds up to 10 times; throws CertFailed with the
// worst residual when all retries miss.
Reservoir sample_reservoir(const LinearHypergraph& H, double rho, double xi,
                           double eps, uint64_t seed);

// Regularising reservoir: extends a certified absorber so that every
// high-degree vertex w has d_R(w) close to rho d_G(w) and every other vertex
// lands in the stated window, using a degree-constrained subgraph of the
// unreserved graph edges.  Throws NotFull / FactorInfeasible.
Reservoir regularising_reservoir(const LinearHypergraph& H,
                                 const Reservoir& R_abs, double rho, double xi,
                                 double eps);

// Typicality is checked exactly against every (vertex, set) pair of the given
// family; upper regularity is checked on sample_trials random disjoint vertex
// pairs (S, T) with |S|, |T| >= xi n.
AbsorberCert certify_absorber(const Reservoir& R, const LinearHypergraph& H,
                              const std::vector<std::vector<Vertex>>& family,
                              double rho, double gamma, double xi, double eps,
                              int sample_trials, uint64_t seed);

// The regularized small-edge multi-hypergraph: small edges outside the
// reservoir plus per-vertex singleton padding (at most n-3-d_H(w) each) so
// that all degrees land in (1-rho)(n-1 +- beta n).
struct RegularizedSmall {
  LinearHypergraph Hp;        // multi-singleton hypergraph
  std::vector<int> padding;   // singletons added per vertex
};
RegularizedSmall regularize_small(const LinearHypergraph& H,
                                  const Reservoir& R_res, const Hierarchy& h);

// A matching is difficult when |V \ U| >= 2 and the matching covers at least
// three quarters of V \ U.
bool is_difficult(const LinearHypergraph& H, const std::vector<EdgeId>& M,
                  double eps);

// Extends each matching with unused reservoir edges so the high-degree set U
// is covered: perfectly when |U| <= (1-2 eps) n, else nearly-perfectly with
// the single defect per matching inside S.  Additions are pairwise
// edge-disjoint across the batch.  Throws AbsorptionFailed(i).
std::vector<std::vector<EdgeId>> absorb_batch(
    const LinearHypergraph& H, const std::vector<std::vector<EdgeId>>& N,
    const Reservoir& R, const std::vector<Vertex>& S, const AbsorbParams& p,
    uint64_t seed);

// Per-matching hypothesis tag for the typicality-based extension.
enum class AbsorbTag { Smallness, Typicality };

// Same extension contract, driven by per-matching smallness (v(M) <= gamma n)
// or typicality (|V(M) cap U| <= eps n) hypotheses; difficult matchings are
// rejected with DifficultRejected so the caller can route them to
// absorb_difficult.  Coverage is perfect when |U| <= (1-10 eps) n.
std::vector<std::vector<EdgeId>> absorb_small_typical(
    const LinearHypergraph& H, const std::vector<std::vector<EdgeId>>& N,
    const std::vector<AbsorbTag>& tags, const Reservoir& R,
    const std::vector<Vertex>& S, const AbsorbParams& p, uint64_t seed);

// Outcome of the difficult-edge analysis: either a matching through the huge
// edge covering all degree-(n-1) vertices and all but at most five
// degree-(n-2) vertices, or a full proper coloring of H with at most n
// colors.
struct DifficultOutcome {
  std::optional<std::vector<EdgeId>> matching;  // branch (a)
  std::optional<EdgeColoring> coloring;         // branch (b)
};
DifficultOutcome absorb_difficult(const LinearHypergraph& H, EdgeId e,
                                  double eps);

}  // namespace efl
