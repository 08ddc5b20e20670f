#pragma once
// Edge orderings, forward degrees, the forward-degree inequality audit, and
// the fix-from-the-back reordering procedure.

#include "efl/types.hpp"

#include <optional>

namespace efl {

struct EdgeOrdering {
  std::vector<EdgeId> perm;  // position -> edge id
  std::vector<int> pos;      // edge id -> position

  static EdgeOrdering identity(int m) {
    EdgeOrdering o;
    o.perm.resize(m);
    o.pos.resize(m);
    for (int i = 0; i < m; ++i) o.perm[i] = o.pos[i] = i;
    return o;
  }
};

// Non-increasing sizes, ties by edge index.
EdgeOrdering size_order(const LinearHypergraph& H);

// |{f : f intersects e and precedes e}| under `ord`.
int fwddeg(const LinearHypergraph& H, const EdgeOrdering& ord, EdgeId e);

// Per-edge forward-degree audit.  For each edge e with |e| > 1 + alpha2:
//   m1 = #neighbors of size >= (1+alpha1)|e|,
//   m2 = #neighbors with (1+alpha1)|e| > |f| >= |e|/(1+alpha2),
// check (i): (1+alpha1) m1 + m2/(1+alpha2) <= n + (1+alpha2) n/(|e|-1-alpha2),
// and when m1+m2 >= (1-tau)n and alpha1 > 0, check
// (ii): m1 <= (tau + (1+alpha2)(1+alpha2 |e|)/(|e|-1-alpha2)) n / alpha1.
struct FwdAuditRow {
  EdgeId e;
  int m1 = 0, m2 = 0;
  bool ineq1_ok = true;
  bool ineq2_checked = false;
  bool ineq2_ok = true;
};
std::vector<FwdAuditRow> audit_fwd_inequalities(const LinearHypergraph& H,
                                                const EdgeOrdering& ord,
                                                double alpha1, double alpha2,
                                                double tau);

// Reordering outcome.
struct ReorderOutcome {
  enum class Kind { Good, Window } kind = Kind::Good;
  EdgeOrdering ord;
  bool certified = true;  // false only after the iteration cap was hit
  // Window payload:
  EdgeId e_star = -1;
  std::vector<EdgeId> W;  // window edges (all <= e*, sizes inside the ratio)
  int w_max_size = 0, w_min_size = 0;
  double w_volume = 0.0;
};

// Fix-from-the-back local search.  Either every edge ends with
// fwddeg <= (1-tau) n ("Good"), or a pivot e* is returned with
//  (O1) every edge after e* has fwddeg <= (1-tau) n, and
//  (O2) sizes are non-increasing up to e*;
// W = { f <= e* : |f| <= (1 + 3 tau^{1/4} K^4) |e*| }.
// Both outcomes are re-checked by full scans before returning.
ReorderOutcome reorder(const LinearHypergraph& H, double tau, double K,
                       int64_t iter_cap = -1);

}  // namespace efl
