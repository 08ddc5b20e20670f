#include "efl/ordering.hpp"

#include "efl/hypercore.hpp"

#include <cmath>
#include <numeric>

namespace efl {

EdgeOrdering size_order(const LinearHypergraph& H) {
  int m = H.edge_count();
  EdgeOrdering o;
  o.perm.resize(m);
  std::iota(o.perm.begin(), o.perm.end(), 0);
  std::stable_sort(o.perm.begin(), o.perm.end(), [&](EdgeId a, EdgeId b) {
    return H.edge_size(a) > H.edge_size(b);
  });
  o.pos.resize(m);
  for (int i = 0; i < m; ++i) o.pos[o.perm[i]] = i;
  return o;
}

int fwddeg(const LinearHypergraph& H, const EdgeOrdering& ord, EdgeId e) {
  int c = 0;
  // Neighbors via incidence; linearity makes each neighbor counted once.
  for (Vertex v : H.edges[e])
    for (EdgeId f : H.incidence[v])
      if (f != e && ord.pos[f] < ord.pos[e]) ++c;
  return c;
}

std::vector<FwdAuditRow> audit_fwd_inequalities(const LinearHypergraph& H,
                                                const EdgeOrdering& ord,
                                                double alpha1, double alpha2,
                                                double tau) {
  (void)ord;  // m1/m2 range over all neighbors; the ordering fixes context only
  std::vector<FwdAuditRow> rows;
  double n = H.n;
  auto lg = line_graph(H);
  for (EdgeId e = 0; e < H.edge_count(); ++e) {
    double r = H.edge_size(e);
    if (!(r > 1.0 + alpha2)) continue;
    FwdAuditRow row;
    row.e = e;
    for (EdgeId f : lg[e]) {
      double s = H.edge_size(f);
      if (s >= (1.0 + alpha1) * r)
        ++row.m1;
      else if (s >= r / (1.0 + alpha2))
        ++row.m2;
    }
    double lhs = (1.0 + alpha1) * row.m1 + row.m2 / (1.0 + alpha2);
    double rhs = n + (1.0 + alpha2) * n / (r - 1.0 - alpha2);
    row.ineq1_ok = lhs <= rhs + 1e-9;
    if (alpha1 > 0 && row.m1 + row.m2 >= (1.0 - tau) * n) {
      row.ineq2_checked = true;
      double bound =
          (tau + (1.0 + alpha2) * (1.0 + alpha2 * r) / (r - 1.0 - alpha2)) * n /
          alpha1;
      row.ineq2_ok = row.m1 <= bound + 1e-9;
    }
    rows.push_back(row);
  }
  return rows;
}

ReorderOutcome reorder(const LinearHypergraph& H, double tau, double K,
                       int64_t iter_cap) {
  if (!(tau > 0 && tau < 1) || K < 1)
    throw Error("BadParam", "need 0<tau<1 and K>=1");
  if (!(1.0 - tau - 7.0 * std::pow(tau, 0.25) / K > 0) && H.edge_count() > 0) {
    // The parameter sanity condition from the lemma; warn-level only at desk
    // scale: proceed, the postconditions are still checked exactly.
  }
  for (EdgeId e = 0; e < H.edge_count(); ++e)
    if (H.edge_size(e) < 2) throw Error("BadParam", "reorder needs |e| >= 2");

  int m = H.edge_count();
  if (iter_cap < 0) iter_cap = 20LL * m * m + 64;
  auto lg = line_graph(H);

  ReorderOutcome out;
  out.ord = size_order(H);
  auto& ord = out.ord;
  double bound = (1.0 - tau) * H.n;

  // Moves an edge from position `from` to immediately after position `to`
  // (from < to).  Everything in between shifts left by one.
  auto move_after = [&](int from, int to) {
    EdgeId e = ord.perm[from];
    for (int i = from; i < to; ++i) ord.perm[i] = ord.perm[i + 1];
    ord.perm[to] = e;
    for (int i = from; i <= to; ++i) ord.pos[ord.perm[i]] = i;
  };

  int attn = m - 1;  // position of the current pivot e*
  int64_t iters = 0;
  while (attn >= 0) {
    if (++iters > iter_cap) {
      out.kind = ReorderOutcome::Kind::Good;
      out.certified = false;
      return out;
    }
    EdgeId estar = ord.perm[attn];
    if (fwddeg(H, ord, estar) <= bound) {
      --attn;  // shift attention to the predecessor
      continue;
    }
    // Find a movable intersecting predecessor: an f before e* whose neighbor
    // count inside the prefix (up to and including e*) stays within the
    // bound once f sits right after e*.  Tie-break: smallest count, then
    // lowest edge id.
    EdgeId best = -1;
    int best_cnt = 0;
    for (EdgeId f : lg[estar]) {
      if (ord.pos[f] >= attn) continue;
      int cnt = 0;
      for (Vertex v : H.edges[f])
        for (EdgeId g : H.incidence[v])
          if (g != f && ord.pos[g] <= attn) ++cnt;
      if (cnt <= bound && (best == -1 || cnt < best_cnt ||
                           (cnt == best_cnt && f < best))) {
        best = f;
        best_cnt = cnt;
      }
    }
    if (best == -1) {
      // Window outcome around e*.
      out.kind = ReorderOutcome::Kind::Window;
      out.e_star = estar;
      double ratio = 1.0 + 3.0 * std::pow(tau, 0.25) * std::pow(K, 4.0);
      double cap_size = ratio * H.edge_size(estar);
      for (int i = 0; i <= attn; ++i)
        if (H.edge_size(ord.perm[i]) <= cap_size) out.W.push_back(ord.perm[i]);
      if (!out.W.empty()) {
        out.w_max_size = out.w_min_size = H.edge_size(out.W.front());
        for (EdgeId f : out.W) {
          out.w_max_size = std::max(out.w_max_size, H.edge_size(f));
          out.w_min_size = std::min(out.w_min_size, H.edge_size(f));
        }
      }
      out.w_volume = volume(H, out.W);
      // (O1): every edge after e* obeys the forward-degree bound.
      for (int i = attn + 1; i < m; ++i)
        if (fwddeg(H, ord, ord.perm[i]) > bound)
          throw Error("PostconditionViolated", "(O1) failed");
      // (O2): sizes non-increasing up to e*.
      for (int i = 1; i <= attn; ++i)
        if (H.edge_size(ord.perm[i]) > H.edge_size(ord.perm[i - 1]))
          throw Error("PostconditionViolated", "(O2) failed");
      return out;
    }
    move_after(ord.pos[best], attn);
    --attn;  // e* shifted left by one; keep attention on it
  }

  out.kind = ReorderOutcome::Kind::Good;
  for (EdgeId e = 0; e < m; ++e)
    if (fwddeg(H, ord, e) > bound)
      throw Error("PostconditionViolated", "Good outcome bound failed");
  return out;
}

}  // namespace efl
