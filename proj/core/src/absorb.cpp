#include "efl/absorb.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "efl/finish.hpp"
#include "efl/greedy.hpp"
#include "efl/hypercore.hpp"
#include "efl/matching.hpp"

namespace efl {

namespace {

// Map (a,b) with a<b to a key for pair lookups.
uint64_t pkey(int a, int b) {
  if (a > b) std::swap(a, b);
  return (uint64_t)a << 32 | (uint32_t)b;
}

std::vector<int> reservoir_degrees(const LinearHypergraph& H,
                                   const Reservoir& R) {
  std::vector<int> d(H.n, 0);
  for (EdgeId e : R.edges) {
    ++d[H.edges[e][0]];
    ++d[H.edges[e][1]];
  }
  return d;
}

}  // namespace

Reservoir sample_reservoir(const LinearHypergraph& H, double rho, double xi,
                           double eps, uint64_t seed) {
  if (rho < 0 || rho >= 1) throw Error("BadParam", "need 0 <= rho < 1");
  auto dv = derived_views(H, eps);
  double worst_seen = 0;
  for (int attempt = 0; attempt < 10; ++attempt) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
    std::bernoulli_distribution flip(rho);
    Reservoir R;
    R.kind = Reservoir::Kind::A1;
    R.rho = rho;
    R.xi = xi;
    R.eps = eps;
    for (EdgeId e : dv.graph_edges)
      if (rho > 0 && flip(rng)) R.edges.push_back(e);
    auto d = reservoir_degrees(H, R);
    double worst = 0;
    for (Vertex v = 0; v < H.n; ++v)
      worst = std::max(worst, std::abs(d[v] - rho * dv.graph_degree[v]));
    R.degree_residual = worst;
    R.degree_window_ok = worst <= xi * H.n + 1e-9;
    worst_seen = std::max(worst_seen, worst);
    if (R.degree_window_ok) return R;
  }
  // Bernoulli fluctuations exceed the window; repair with a degree-window
  // factor of the graph part, seeded by shuffling the candidate edge order.
  {
    SimpleGraph Gp;
    Gp.n = H.n;
    std::vector<EdgeId> ids = dv.graph_edges;
    Rng rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    std::shuffle(ids.begin(), ids.end(), rng);
    for (EdgeId e : ids) Gp.edges.emplace_back(H.edges[e][0], H.edges[e][1]);
    std::vector<int> g(H.n), f(H.n);
    bool window_empty = false;
    for (Vertex v = 0; v < H.n; ++v) {
      double target = rho * dv.graph_degree[v];
      g[v] = std::max(0, (int)std::ceil(target - xi * H.n - 1e-9));
      f[v] = std::min(dv.graph_degree[v], (int)std::floor(target + xi * H.n + 1e-9));
      if (f[v] < g[v]) window_empty = true;
    }
    if (window_empty)
      throw Error("CertFailed",
                  "reservoir degree window contains no integer for some vertex");
    try {
      auto factor = gf_factor(Gp, g, f);
      Reservoir R;
      R.kind = Reservoir::Kind::A1;
      R.rho = rho;
      R.xi = xi;
      R.eps = eps;
      std::set<std::pair<int, int>> picked(factor.begin(), factor.end());
      for (size_t i = 0; i < ids.size(); ++i) {
        auto [a, b] = Gp.edges[i];
        if (picked.count({a, b}) || picked.count({b, a})) R.edges.push_back(ids[i]);
      }
      auto d = reservoir_degrees(H, R);
      double worst = 0;
      for (Vertex v = 0; v < H.n; ++v)
        worst = std::max(worst, std::abs(d[v] - rho * dv.graph_degree[v]));
      R.degree_residual = worst;
      R.degree_window_ok = worst <= xi * H.n + 1e-9;
      if (R.degree_window_ok) return R;
      worst_seen = std::max(worst_seen, worst);
    } catch (const Error&) {
      // fall through to CertFailed
    }
  }
  throw Error("CertFailed", "reservoir degree window missed on 10 seeds; worst residual " +
                                std::to_string(worst_seen));
}

Reservoir regularising_reservoir(const LinearHypergraph& H,
                                 const Reservoir& R_abs, double rho, double xi,
                                 double eps) {
  auto fr = is_full(H, rho, eps);
  if (!fr.full) throw Error("NotFull", "instance is not (rho,eps)-full");
  auto dv = derived_views(H, eps);

  std::unordered_set<uint64_t> taken;
  for (EdgeId e : R_abs.edges) taken.insert(pkey(H.edges[e][0], H.edges[e][1]));
  auto d_abs = reservoir_degrees(H, R_abs);

  // Available graph edges outside the absorber, with per-vertex degree
  // windows closing the gap to rho d_G(w); g = f - 1 wherever f > 0.
  SimpleGraph avail;
  avail.n = H.n;
  std::vector<EdgeId> avail_id;
  std::vector<int> avail_deg(H.n, 0);
  for (EdgeId e : dv.graph_edges) {
    if (taken.count(pkey(H.edges[e][0], H.edges[e][1]))) continue;
    avail.edges.emplace_back(H.edges[e][0], H.edges[e][1]);
    avail_id.push_back(e);
    ++avail_deg[H.edges[e][0]];
    ++avail_deg[H.edges[e][1]];
  }
  std::vector<int> g(H.n, 0), f(H.n, 0);
  for (Vertex w = 0; w < H.n; ++w) {
    int target = (int)std::llround(rho * dv.graph_degree[w]);
    f[w] = std::clamp(target - d_abs[w], 0, avail_deg[w]);
    g[w] = std::max(0, f[w] - 1);
  }
  std::vector<std::pair<int, int>> factor;
  try {
    factor = gf_factor(avail, g, f);
  } catch (const Error& err) {
    throw Error("FactorInfeasible", err.what());
  }

  Reservoir R = R_abs;
  R.kind = Reservoir::Kind::A2;
  R.rho = rho;
  R.xi = xi;
  R.eps = eps;
  std::map<std::pair<int, int>, EdgeId> lookup;
  for (size_t i = 0; i < avail.edges.size(); ++i) {
    auto [a, b] = avail.edges[i];
    lookup[{std::min(a, b), std::max(a, b)}] = avail_id[i];
  }
  for (auto [a, b] : factor)
    R.edges.push_back(lookup.at({std::min(a, b), std::max(a, b)}));
  std::sort(R.edges.begin(), R.edges.end());

  // Degree windows: near rho d_G(w) at high-degree vertices, the relaxed
  // window elsewhere.
  auto d = reservoir_degrees(H, R);
  double worst = 0;
  bool ok = true;
  for (Vertex w = 0; w < H.n; ++w) {
    double dev = std::abs(d[w] - rho * dv.graph_degree[w]);
    worst = std::max(worst, dev);
    if (dv.in_U[w]) {
      if (dev > xi * H.n + 1) ok = false;
    } else {
      double lo = std::max(rho * dv.graph_degree[w] - xi * H.n - 1,
                           (rho - 20 * eps) * H.n);
      double hi = rho * (1 - eps) * H.n + xi * H.n + 1;
      if (d[w] < std::min(lo, (double)d[w]) - 1e-9 || d[w] > hi + 1e-9)
        ok = false;
    }
  }
  R.degree_residual = worst;
  R.degree_window_ok = ok;
  return R;
}

AbsorberCert certify_absorber(const Reservoir& R, const LinearHypergraph& H,
                              const std::vector<std::vector<Vertex>>& family,
                              double rho, double gamma, double xi, double eps,
                              int sample_trials, uint64_t seed) {
  auto dv = derived_views(H, eps);
  AbsorberCert cert;

  // Containment in the crossing graph G'.
  std::unordered_set<EdgeId> gp(dv.crossing_edges.begin(),
                                dv.crossing_edges.end());
  cert.containment = std::all_of(R.edges.begin(), R.edges.end(),
                                 [&](EdgeId e) { return gp.count(e) > 0; });

  // Neighborhood maps in R and in G'.
  std::vector<std::vector<Vertex>> nbR(H.n), nbG(H.n);
  for (EdgeId e : R.edges) {
    nbR[H.edges[e][0]].push_back(H.edges[e][1]);
    nbR[H.edges[e][1]].push_back(H.edges[e][0]);
  }
  for (EdgeId e : dv.crossing_edges) {
    nbG[H.edges[e][0]].push_back(H.edges[e][1]);
    nbG[H.edges[e][1]].push_back(H.edges[e][0]);
  }
  // Typicality: for every v and X in the family, both the inside and outside
  // counts track rho times the G' counterpart within gamma n.
  for (const auto& X : family) {
    std::vector<char> in_x(H.n, 0);
    for (Vertex v : X)
      if (v >= 0 && v < H.n) in_x[v] = 1;
    for (Vertex v = 0; v < H.n; ++v) {
      int rin = 0, gin = 0;
      for (Vertex u : nbR[v]) rin += in_x[u];
      for (Vertex u : nbG[v]) gin += in_x[u];
      double dev_in = std::abs(rin - rho * gin);
      double dev_out = std::abs(((int)nbR[v].size() - rin) -
                                rho * ((int)nbG[v].size() - gin));
      cert.typicality_max_residual =
          std::max({cert.typicality_max_residual, dev_in, dev_out});
    }
  }

  // Sampled upper regularity: e_R(S,T) <= rho e_{G'}(S,T) + xi |S||T|.
  Rng rng(seed);
  int s_min = std::max(1, (int)std::ceil(xi * H.n));
  if (2 * s_min <= H.n) {
    std::vector<Vertex> perm(H.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < sample_trials; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::uniform_int_distribution<int> szd(s_min, H.n / 2);
      int sa = szd(rng), sb = std::min(szd(rng), H.n - sa);
      if (sb < s_min) continue;
      std::vector<char> side(H.n, 0);
      for (int i = 0; i < sa; ++i) side[perm[i]] = 1;
      for (int i = sa; i < sa + sb; ++i) side[perm[i]] = 2;
      long long er = 0, eg = 0;
      for (EdgeId e : R.edges) {
        int a = side[H.edges[e][0]], b = side[H.edges[e][1]];
        if ((a == 1 && b == 2) || (a == 2 && b == 1)) ++er;
      }
      for (EdgeId e : dv.crossing_edges) {
        int a = side[H.edges[e][0]], b = side[H.edges[e][1]];
        if ((a == 1 && b == 2) || (a == 2 && b == 1)) ++eg;
      }
      double margin = er - (rho * eg + xi * (double)sa * sb);
      cert.regularity_worst_margin =
          std::max(cert.regularity_worst_margin, margin);
    }
  }
  cert.certified = cert.containment &&
                   cert.typicality_max_residual <= gamma * H.n + 1e-9 &&
                   cert.regularity_worst_margin <= 1e-9;
  return cert;
}

RegularizedSmall regularize_small(const LinearHypergraph& H,
                                  const Reservoir& R_res, const Hierarchy& h) {
  int n = H.n;
  std::unordered_set<EdgeId> in_res(R_res.edges.begin(), R_res.edges.end());
  RegularizedSmall out;
  out.Hp.n = n;
  out.Hp.multi_singletons = true;
  for (EdgeId e = 0; e < H.edge_count(); ++e) {
    if (H.edge_size(e) > h.r1) continue;   // only small edges participate
    if (in_res.count(e)) continue;         // reserved edges are withheld
    out.Hp.edges.push_back(H.edges[e]);
  }
  std::vector<int> deg0(n, 0);
  for (const auto& e : out.Hp.edges)
    for (Vertex v : e) ++deg0[v];

  // Pad with singletons toward the target, never past the per-vertex cap.
  double target = (1.0 - R_res.rho) * (n - 1) - h.beta * n / 2.0;
  int k = std::max(0, (int)std::floor(target));
  out.padding.assign(n, 0);
  for (Vertex w = 0; w < n; ++w) {
    int cap = std::max(0, n - 3 - H.degree(w));
    int want = std::max(0, k - deg0[w]);
    out.padding[w] = std::min(want, cap);
    for (int i = 0; i < out.padding[w]; ++i) out.Hp.edges.push_back({w});
  }
  out.Hp.rebuild_incidence();

  double lo = (1.0 - R_res.rho) * ((double)n - 1 - h.beta * n);
  double hi = (1.0 - R_res.rho) * ((double)n - 1 + h.beta * n);
  for (Vertex w = 0; w < n; ++w) {
    int d = deg0[w] + out.padding[w];
    if (d < lo - 1e-9 || d > hi + 1e-9)
      throw Error("WindowMiss",
                  "vertex " + std::to_string(w) + " has regularized degree " +
                      std::to_string(d) + " outside [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  }
  return out;
}

bool is_difficult(const LinearHypergraph& H, const std::vector<EdgeId>& M,
                  double eps) {
  auto dv = derived_views(H, eps);
  int outside = H.n - (int)dv.U.size();
  if (outside < 2) return false;
  std::vector<char> cov(H.n, 0);
  for (EdgeId e : M)
    for (Vertex v : H.edges[e]) cov[v] = 1;
  int covered_outside = 0;
  for (Vertex v = 0; v < H.n; ++v)
    if (!dv.in_U[v] && cov[v]) ++covered_outside;
  return 4 * covered_outside >= 3 * outside;
}

namespace {

// Shared extension engine: greedily pairs uncovered target vertices through
// reservoir edges internal to the uncovered set, then Hall-matches the rest
// to crossing reservoir edges whose partner avoids the matching.  `used`
// tracks reservoir edges consumed across the whole batch.
struct ExtendResult {
  std::vector<EdgeId> added;
  std::vector<Vertex> leftover;  // target vertices still uncovered
};

ExtendResult extend_one(const LinearHypergraph& H,
                        const std::vector<EdgeId>& Ni,
                        const std::vector<Vertex>& target,
                        const std::vector<EdgeId>& reservoir,
                        std::vector<char>& used) {
  int n = H.n;
  std::vector<char> inN(n, 0);
  for (EdgeId e : Ni)
    for (Vertex v : H.edges[e]) inN[v] = 1;
  std::vector<char> need(n, 0);
  for (Vertex v : target)
    if (!inN[v]) need[v] = 1;

  ExtendResult res;
  std::vector<char> blocked = inN;  // vertices no new edge may touch

  // Pass 1: maximum matching (blossom) on the subgraph induced by the
  // uncovered targets; a merely maximal greedy pass strands vertices whose
  // remaining partners are all blocked.
  {
    std::vector<std::pair<int, int>> pool;
    std::vector<EdgeId> pool_id;
    for (EdgeId r : reservoir) {
      if (used[r]) continue;
      Vertex a = H.edges[r][0], b = H.edges[r][1];
      if (need[a] && need[b] && !blocked[a] && !blocked[b]) {
        pool.emplace_back(a, b);
        pool_id.push_back(r);
      }
    }
    auto match = general_max_matching(n, pool);
    for (size_t i = 0; i < pool.size(); ++i) {
      auto [a, b] = pool[i];
      if (match[a] == b && need[a] && need[b]) {
        used[pool_id[i]] = 1;
        res.added.push_back(pool_id[i]);
        need[a] = need[b] = 0;
        blocked[a] = blocked[b] = 1;
      }
    }
  }
  // Pass 2: Hall matching of remaining uncovered vertices to crossing edges.
  std::vector<Vertex> rem;
  for (Vertex v = 0; v < n; ++v)
    if (need[v]) rem.push_back(v);
  if (!rem.empty()) {
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < rem.size(); ++i) pos[rem[i]] = (int)i;
    // Match remaining targets against partner *vertices* so selected edges
    // stay vertex-disjoint on the partner side.  A partner is usable when it
    // is untouched by the matching and not itself a pending target (edges
    // between two targets were pass-1 material).
    std::vector<int> partner_slot(n, -1);
    std::vector<Vertex> partners;
    // edge_of[i][j]: reservoir edge joining rem[i] to partner slot j.
    std::vector<std::vector<std::pair<int, EdgeId>>> cand(rem.size());
    for (EdgeId r : reservoir) {
      if (used[r]) continue;
      Vertex a = H.edges[r][0], b = H.edges[r][1];
      auto offer = [&](Vertex u, Vertex x) {
        if (pos[u] < 0 || blocked[x] || need[x]) return;
        if (partner_slot[x] < 0) {
          partner_slot[x] = (int)partners.size();
          partners.push_back(x);
        }
        cand[pos[u]].emplace_back(partner_slot[x], r);
      };
      offer(a, b);
      offer(b, a);
    }
    BipartiteGraph B;
    B.a_size = (int)rem.size();
    B.b_size = (int)partners.size();
    B.adj.assign(B.a_size, {});
    for (size_t i = 0; i < rem.size(); ++i)
      for (auto [slot, r] : cand[i]) B.adj[i].push_back(slot);
    auto hr = hall_bipartite(B);
    for (size_t i = 0; i < rem.size(); ++i) {
      int slot = hr.match_a[i];
      if (slot < 0) {
        res.leftover.push_back(rem[i]);
        continue;
      }
      EdgeId r = -1;
      for (auto [s, e] : cand[i])
        if (s == slot) {
          r = e;
          break;
        }
      used[r] = 1;
      res.added.push_back(r);
    }
  }
  return res;
}

}  // namespace

std::vector<std::vector<EdgeId>> absorb_batch(
    const LinearHypergraph& H, const std::vector<std::vector<EdgeId>>& N,
    const Reservoir& R, const std::vector<Vertex>& S, const AbsorbParams& p,
    uint64_t seed) {
  (void)seed;
  auto dv = derived_views(H, p.eps);
  if ((double)N.size() > p.kappa * H.n + 1)
    throw Error("PreconditionUnmet", "too many matchings for kappa n");
  bool need_perfect = (double)dv.U.size() <= (1.0 - 2 * p.eps) * H.n;
  if (!need_perfect && (double)S.size() < p.gamma * H.n)
    throw Error("PreconditionUnmet", "defect set smaller than gamma n");

  std::vector<char> used(H.edge_count(), 0);
  // Edges already inside any input matching are never reused as additions.
  for (const auto& Ni : N)
    for (EdgeId e : Ni)
      if (e >= 0 && e < H.edge_count()) used[e] = 1;

  std::vector<char> in_s(H.n, 0);
  for (Vertex v : S) in_s[v] = 1;
  std::vector<std::vector<EdgeId>> out;
  for (size_t i = 0; i < N.size(); ++i) {
    auto ext = extend_one(H, N[i], dv.U, R.edges, used);
    if (need_perfect && !ext.leftover.empty())
      throw Error("AbsorptionFailed",
                  "matching " + std::to_string(i) + " left " +
                      std::to_string(ext.leftover.size()) +
                      " target vertices uncovered");
    if (!need_perfect) {
      if (ext.leftover.size() > 1)
        throw Error("AbsorptionFailed",
                    "matching " + std::to_string(i) + " left " +
                        std::to_string(ext.leftover.size()) + " defects");
      for (Vertex v : ext.leftover)
        if (!in_s[v])
          throw Error("AbsorptionFailed", "defect vertex " +
                                              std::to_string(v) +
                                              " outside the permitted set");
    }
    auto Np = N[i];
    Np.insert(Np.end(), ext.added.begin(), ext.added.end());
    out.push_back(std::move(Np));
  }
  // Postconditions via the coverage report.
  auto cov = coverage(H, out, dv.U, S);
  if (need_perfect && cov.status != CoverageStatus::Perfect)
    throw Error("AbsorptionFailed", "coverage scan is not perfect");
  if (!need_perfect && cov.status == CoverageStatus::Neither)
    throw Error("AbsorptionFailed", "coverage scan failed");
  return out;
}

std::vector<std::vector<EdgeId>> absorb_small_typical(
    const LinearHypergraph& H, const std::vector<std::vector<EdgeId>>& N,
    const std::vector<AbsorbTag>& tags, const Reservoir& R,
    const std::vector<Vertex>& S, const AbsorbParams& p, uint64_t seed) {
  (void)seed;
  if (tags.size() != N.size()) throw Error("BadParam", "one tag per matching");
  auto dv = derived_views(H, p.eps);
  if ((double)N.size() > p.gamma * H.n + 1)
    throw Error("PreconditionUnmet", "too many matchings for gamma n");
  bool need_perfect = (double)dv.U.size() <= (1.0 - 10 * p.eps) * H.n;
  if (!need_perfect && (double)S.size() <= (p.gamma + p.eps) * H.n)
    throw Error("PreconditionUnmet", "defect set too small");

  for (size_t i = 0; i < N.size(); ++i) {
    long long vcount = 0, ucount = 0;
    for (EdgeId e : N[i]) {
      vcount += H.edge_size(e);
      for (Vertex v : H.edges[e]) ucount += dv.in_U[v];
    }
    if (tags[i] == AbsorbTag::Smallness) {
      if ((double)vcount > p.gamma * H.n + 1e-9)
        throw Error("PreconditionUnmet",
                    "matching " + std::to_string(i) + " is not small");
    } else {
      if ((double)ucount > p.eps * H.n + 1e-9)
        throw Error("PreconditionUnmet",
                    "matching " + std::to_string(i) + " is not typical");
      if (is_difficult(H, N[i], p.eps))
        throw Error("DifficultRejected",
                    "matching " + std::to_string(i) + " is difficult");
    }
  }

  std::vector<char> used(H.edge_count(), 0);
  for (const auto& Ni : N)
    for (EdgeId e : Ni)
      if (e >= 0 && e < H.edge_count()) used[e] = 1;
  std::vector<char> in_s(H.n, 0);
  for (Vertex v : S) in_s[v] = 1;
  std::vector<std::vector<EdgeId>> out;
  for (size_t i = 0; i < N.size(); ++i) {
    auto ext = extend_one(H, N[i], dv.U, R.edges, used);
    if (need_perfect && !ext.leftover.empty())
      throw Error("AbsorptionFailed",
                  "matching " + std::to_string(i) + " not fully absorbed");
    if (!need_perfect) {
      if (ext.leftover.size() > 1)
        throw Error("AbsorptionFailed", "more than one defect");
      for (Vertex v : ext.leftover)
        if (!in_s[v]) throw Error("AbsorptionFailed", "defect outside S");
    }
    auto Np = N[i];
    Np.insert(Np.end(), ext.added.begin(), ext.added.end());
    out.push_back(std::move(Np));
  }
  auto cov = coverage(H, out, dv.U, S);
  if (need_perfect && cov.status != CoverageStatus::Perfect)
    throw Error("AbsorptionFailed", "coverage scan is not perfect");
  if (!need_perfect && cov.status == CoverageStatus::Neither)
    throw Error("AbsorptionFailed", "coverage scan failed");
  return out;
}

DifficultOutcome absorb_difficult(const LinearHypergraph& H, EdgeId e,
                                  double eps) {
  int n = H.n;
  if (e < 0 || e >= H.edge_count()) throw Error("BadParam", "bad edge id");
  for (EdgeId f = 0; f < H.edge_count(); ++f)
    if (H.edge_size(f) == 1)
      throw Error("PreconditionUnmet", "singleton edges present");
  if (!is_difficult(H, {e}, eps) && H.n - [&] {
        auto dv = derived_views(H, eps);
        return (int)dv.U.size();
      }() >= 2)
    throw Error("PreconditionUnmet", "{e} is not difficult");

  // Degree-(n-1) and degree-(>= n-2) vertex classes.
  std::vector<Vertex> u1, u2;
  for (Vertex v = 0; v < n; ++v) {
    if (H.degree(v) == n - 1) u1.push_back(v);
    if (H.degree(v) >= n - 2) u2.push_back(v);
  }

  std::vector<char> in_e(n, 0);
  for (Vertex v : H.edges[e]) in_e[v] = 1;

  // Branch (a): grow a matching through e over graph edges disjoint from e,
  // covering every u1-vertex and all but <= 5 of u2.
  std::vector<Vertex> t1, t2;  // targets outside e
  for (Vertex v : u1)
    if (!in_e[v]) t1.push_back(v);
  for (Vertex v : u2)
    if (!in_e[v] && H.degree(v) == n - 2) t2.push_back(v);

  // Collect usable graph edges (size-2, disjoint from e).
  std::vector<EdgeId> gedges;
  for (EdgeId f = 0; f < H.edge_count(); ++f) {
    if (H.edge_size(f) != 2 || f == e) continue;
    if (in_e[H.edges[f][0]] || in_e[H.edges[f][1]]) continue;
    gedges.push_back(f);
  }

  // Exhaustive search over the (tiny) target classes: the exceptional graph
  // has at most a handful of vertices in every reachable instance.
  std::vector<Vertex> targets = t1;
  targets.insert(targets.end(), t2.begin(), t2.end());
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  int need1 = (int)t1.size();

  std::vector<char> vert_used(n, 0);
  std::vector<EdgeId> best;
  bool found = false;
  std::vector<char> t1mask(n, 0);
  for (Vertex v : t1) t1mask[v] = 1;
  std::vector<char> tmask(n, 0);
  for (Vertex v : targets) tmask[v] = 1;

  std::function<void(size_t, int, int, std::vector<EdgeId>&)> rec =
      [&](size_t idx, int cov1, int cov2, std::vector<EdgeId>& cur) {
        if (found) return;
        if (cov1 == need1 && (int)t2.size() - cov2 <= 5) {
          best = cur;
          found = true;
          return;
        }
        if (idx == gedges.size()) return;
        EdgeId f = gedges[idx];
        Vertex a = H.edges[f][0], b = H.edges[f][1];
        if (!vert_used[a] && !vert_used[b] && (tmask[a] || tmask[b])) {
          vert_used[a] = vert_used[b] = 1;
          cur.push_back(f);
          int d1 = (t1mask[a] ? 1 : 0) + (t1mask[b] ? 1 : 0);
          int d2 = (tmask[a] && !t1mask[a] ? 1 : 0) +
                   (tmask[b] && !t1mask[b] ? 1 : 0);
          rec(idx + 1, cov1 + d1, cov2 + d2, cur);
          cur.pop_back();
          vert_used[a] = vert_used[b] = 0;
        }
        if (!found) rec(idx + 1, cov1, cov2, cur);
      };
  // Greedy first (fast path): take any edge covering an unserved target.
  {
    std::vector<EdgeId> cur;
    std::vector<char> served(n, 0);
    int cov1 = 0, cov2 = 0;
    for (EdgeId f : gedges) {
      Vertex a = H.edges[f][0], b = H.edges[f][1];
      if (vert_used[a] || vert_used[b]) continue;
      bool helps = (tmask[a] && !served[a]) || (tmask[b] && !served[b]);
      if (!helps) continue;
      vert_used[a] = vert_used[b] = 1;
      served[a] = served[b] = 1;
      cur.push_back(f);
      cov1 += (t1mask[a] ? 1 : 0) + (t1mask[b] ? 1 : 0);
      cov2 += (tmask[a] && !t1mask[a] ? 1 : 0) + (tmask[b] && !t1mask[b] ? 1 : 0);
    }
    if (cov1 == need1 && (int)t2.size() - cov2 <= 5) {
      best = cur;
      found = true;
    } else {
      std::fill(vert_used.begin(), vert_used.end(), 0);
      if (targets.size() <= 24) {
        std::vector<EdgeId> tmp;
        rec(0, 0, 0, tmp);
      }
    }
  }
  DifficultOutcome out;
  if (found) {
    best.push_back(e);
    std::sort(best.begin(), best.end());
    out.matching = best;
    return out;
  }

  // Branch (b): full coloring with at most n colors.  The blocking structure
  // forces H to be nearly degenerate, where distinct colors per edge or a
  // star-plus-matching coloring stays within n.
  if (H.edge_count() <= n) {
    EdgeColoring ec;
    ec.color.resize(H.edge_count());
    std::iota(ec.color.begin(), ec.color.end(), 0);
    ec.palette_size = H.edge_count();
    out.coloring = ec;
    return out;
  }
  // General fallback: saturation-order greedy on the line graph, with the
  // exact search as a last resort at tiny scale.
  auto ec = dsatur_line(H);
  if (ec.palette_size > n && H.edge_count() <= 24) {
    auto ex = exact_chromatic_index(H);
    ec = ex.col;
  }
  if (ec.palette_size > n)
    throw Error("AbsorptionFailed",
                "difficult-edge coloring exceeded n colors");
  out.coloring = ec;
  return out;
}

}  // namespace efl
