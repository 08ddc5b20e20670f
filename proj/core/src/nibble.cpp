#include "efl/nibble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "efl/hypercore.hpp"

namespace efl {

namespace {

// One random-order greedy maximal matching over `pool`, skipping vertices in
// `blocked` (which is updated) — returns chosen edge ids.
std::vector<EdgeId> greedy_maximal(const LinearHypergraph& H,
                                   std::vector<EdgeId> pool,
                                   std::vector<char>& blocked, Rng& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<EdgeId> out;
  for (EdgeId e : pool) {
    bool free = true;
    for (Vertex v : H.edges[e])
      if (blocked[v]) {
        free = false;
        break;
      }
    if (!free) continue;
    for (Vertex v : H.edges[e]) blocked[v] = 1;
    out.push_back(e);
  }
  return out;
}

std::vector<FamilyStat> family_stats(
    const LinearHypergraph& H, const std::vector<EdgeId>& M,
    const std::vector<std::vector<Vertex>>& families, double gamma,
    double kappa, double D) {
  std::vector<char> cov(H.n, 0);
  for (EdgeId e : M)
    for (Vertex v : H.edges[e]) cov[v] = 1;
  double floor_size = std::pow(std::max(D, 1.0), 1.0 / 20.0);
  std::vector<FamilyStat> stats;
  for (size_t i = 0; i < families.size(); ++i) {
    const auto& S = families[i];
    if ((double)S.size() < floor_size) continue;
    FamilyStat st;
    st.family_index = (int)i;
    st.size = (int)S.size();
    for (Vertex v : S)
      if (v >= 0 && v < H.n && !cov[v]) ++st.uncovered;
    st.uncovered_fraction = st.size ? (double)st.uncovered / st.size : 0;
    double lo = (gamma - 4 * kappa) * st.size, hi = (gamma + 4 * kappa) * st.size;
    st.in_window = st.uncovered >= lo - 1e-9 && st.uncovered <= hi + 1e-9;
    stats.push_back(st);
  }
  return stats;
}

}  // namespace

PseudorandomResult pseudorandom_matching(
    const LinearHypergraph& H, double gamma, double kappa,
    const std::vector<std::vector<Vertex>>& families, uint64_t seed,
    int retry_cap, bool strict) {
  if (gamma < 0 || gamma > 1) throw Error("BadParam", "gamma outside [0,1]");
  double D = 0;
  for (Vertex v = 0; v < H.n; ++v) D += H.degree(v);
  D /= std::max(1, H.n);

  PseudorandomResult best;
  for (int attempt = 0; attempt < std::max(1, retry_cap); ++attempt) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
    std::vector<EdgeId> pool(H.edge_count());
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<char> blocked(H.n, 0);
    auto M0 = greedy_maximal(H, pool, blocked, rng);
    // Sparsification: each matched edge removed independently with
    // probability gamma.
    std::bernoulli_distribution drop(gamma);
    std::vector<EdgeId> M;
    for (EdgeId e : M0)
      if (!(gamma > 0 && drop(rng))) M.push_back(e);
    std::sort(M.begin(), M.end());

    PseudorandomResult res;
    res.matching = std::move(M);
    res.stats = family_stats(H, res.matching, families, gamma, kappa, D);
    res.all_in_window = std::all_of(res.stats.begin(), res.stats.end(),
                                    [](const FamilyStat& s) { return s.in_window; });
    res.attempts = attempt + 1;
    if (res.all_in_window) return res;
    if (attempt == 0 || !best.all_in_window) best = res;
  }
  if (strict) {
    std::string missed;
    for (const auto& s : best.stats)
      if (!s.in_window) missed += " " + std::to_string(s.family_index);
    throw Error("StatMiss", "out-of-window families:" + missed);
  }
  return best;
}

NibbleResult nibble_color(const LinearHypergraph& H,
                          const LinearHypergraph& Hp,
                          const std::vector<std::vector<EdgeId>>& M,
                          double gamma, double kappa, uint64_t seed,
                          bool strict) {
  int D = (int)M.size();
  Rng rng(seed);
  NibbleResult res;
  res.matchings.resize(D);
  res.uncovered_fraction.resize(D, 1.0);

  std::vector<char> used(Hp.edge_count(), 0);
  std::bernoulli_distribution drop(gamma);
  for (int i = 0; i < D; ++i) {
    // Start from M_i (edges of H); block its vertices, then extend with
    // unused H'-edges to a maximal matching in random order.
    std::vector<char> blocked(H.n, 0);
    for (EdgeId e : M[i]) {
      if (e < 0 || e >= H.edge_count())
        throw Error("BadParam", "pre-colored matching references a bad edge");
      for (Vertex v : H.edges[e]) {
        if (blocked[v]) throw Error("NotAMatching", "input matching " +
                                                        std::to_string(i));
        blocked[v] = 1;
      }
    }
    std::vector<EdgeId> pool;
    for (EdgeId e = 0; e < Hp.edge_count(); ++e)
      if (!used[e] && Hp.edge_size(e) >= 2) pool.push_back(e);
    auto added = greedy_maximal(Hp, pool, blocked, rng);
    // Sparsify the additions only; M_i itself is never removed.
    std::vector<EdgeId> kept;
    for (EdgeId e : added) {
      if (gamma > 0 && drop(rng)) continue;
      kept.push_back(e);
      used[e] = 1;
    }
    res.matchings[i] = kept;  // H'-edge ids; caller owns the id spaces
    // Coverage statistic over V.
    std::vector<char> cov(H.n, 0);
    int covered = 0;
    for (EdgeId e : M[i])
      for (Vertex v : H.edges[e])
        if (!cov[v]) cov[v] = 1, ++covered;
    for (EdgeId e : kept)
      for (Vertex v : Hp.edges[e])
        if (!cov[v]) cov[v] = 1, ++covered;
    res.uncovered_fraction[i] = 1.0 - (double)covered / std::max(1, H.n);
  }
  int unused = 0;
  for (EdgeId e = 0; e < Hp.edge_count(); ++e)
    if (!used[e] && Hp.edge_size(e) >= 2) ++unused;
  int real_edges = 0;
  for (EdgeId e = 0; e < Hp.edge_count(); ++e)
    if (Hp.edge_size(e) >= 2) ++real_edges;
  res.leftover_fraction = real_edges ? (double)unused / real_edges : 0;
  res.containment_ok = true;  // by construction: M_i untouched, additions from H'
  if (strict) {
    for (int i = 0; i < D; ++i)
      if (res.uncovered_fraction[i] > gamma + 4 * kappa + 1e-9)
        throw Error("StatMiss", "matching " + std::to_string(i) +
                                    " uncovered fraction " +
                                    std::to_string(res.uncovered_fraction[i]));
  }
  return res;
}

std::vector<std::vector<EdgeId>> main_color(
    const LinearHypergraph& H, const Hierarchy& h, const Reservoir& R,
    const std::vector<Vertex>& S, const std::vector<std::vector<EdgeId>>& M,
    uint64_t seed) {
  int D = (int)M.size();
  if (D == 0) return {};
  auto reg = regularize_small(H, R, h);
  const auto& Hp = reg.Hp;

  int K = (int)std::ceil(1.0 / h.kappa);
  K = std::min(K, D);
  AbsorbParams p;
  p.rho = R.rho;
  p.gamma = h.gamma1;
  p.kappa = h.kappa;
  p.eps = h.eps1;
  p.xi = h.xi;

  // Round r handles matchings [r*D/K, (r+1)*D/K); within a round the H'
  // edges consumed so far stay excluded (shared `used` ledger realized by
  // handing nibble_color a shrinking H' copy).
  std::vector<std::vector<EdgeId>> out(D);
  std::vector<char> used(Hp.edge_count(), 0);
  for (int r = 0; r < K; ++r) {
    int lo = (int)((int64_t)r * D / K), hi = (int)((int64_t)(r + 1) * D / K);
    if (lo >= hi) continue;
    // Build the residual H' view for this round, remembering original ids.
    LinearHypergraph slice;
    slice.n = Hp.n;
    slice.multi_singletons = true;
    std::vector<EdgeId> orig;
    for (EdgeId e = 0; e < Hp.edge_count(); ++e)
      if (!used[e]) {
        slice.edges.push_back(Hp.edges[e]);
        orig.push_back(e);
      }
    slice.rebuild_incidence();
    std::vector<std::vector<EdgeId>> Mr(M.begin() + lo, M.begin() + hi);
    NibbleResult nr;
    try {
      nr = nibble_color(H, slice, Mr, h.gamma1, h.kappa, seed + 1315423911ULL * r);
    } catch (const Error& err) {
      throw Error("RoundFailed",
                  "round " + std::to_string(r) + " nibble: " + err.what());
    }
    for (size_t i = 0; i < nr.matchings.size(); ++i)
      for (EdgeId e : nr.matchings[i]) used[orig[e]] = 1;
    // Absorption: extend the round's matchings over the reservoir.  The
    // extension works with H-edge ids, so translate by mapping the nibble
    // additions back through the combined matching list.
    std::vector<std::vector<EdgeId>> combined(nr.matchings.size());
    for (size_t i = 0; i < nr.matchings.size(); ++i) combined[i] = Mr[i];
    std::vector<std::vector<EdgeId>> extended;
    try {
      extended = absorb_batch(H, combined, R, S, p, seed + 2654435761ULL * r);
    } catch (const Error& err) {
      throw Error("RoundFailed",
                  "round " + std::to_string(r) + " absorb: " + err.what());
    }
    for (int i = lo; i < hi; ++i) {
      out[i] = extended[i - lo];
      // Record the nibble additions alongside (disjoint id space note: the
      // caller receives H-edge ids from absorption plus H'-ids offset by
      // H.edge_count()).
      for (EdgeId e : nr.matchings[i - lo])
        out[i].push_back(H.edge_count() + orig[e]);
    }
  }
  return out;
}

std::vector<std::vector<EdgeId>> leftover_color(
    const LinearHypergraph& H, const std::vector<int>& C,
    const std::vector<std::vector<EdgeId>>& Mc, const Reservoir& R,
    const std::vector<EdgeId>& H_rem, const std::vector<Vertex>& S,
    const AbsorbParams& p, uint64_t seed) {
  if (C.size() != Mc.size())
    throw Error("BadParam", "one matching per color expected");
  int t = (int)C.size();
  std::vector<std::vector<char>> touched(t, std::vector<char>(H.n, 0));
  std::vector<long long> cover(t, 0);
  for (int i = 0; i < t; ++i)
    for (EdgeId e : Mc[i])
      for (Vertex v : H.edges[e]) {
        touched[i][v] = 1;
        ++cover[i];
      }

  Rng rng(seed);
  std::vector<EdgeId> order = H_rem;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<EdgeId>> assigned(t);
  double cap = p.gamma * H.n / 2.0;
  for (EdgeId e : order) {
    int chosen = -1;
    for (int i = 0; i < t; ++i) {
      bool conflict = false;
      for (Vertex v : H.edges[e])
        if (touched[i][v]) {
          conflict = true;
          break;
        }
      if (conflict) continue;
      if ((double)cover[i] + H.edge_size(e) > cap) continue;
      chosen = i;
      break;
    }
    if (chosen < 0)
      throw Error("ListExhausted",
                  "leftover edge " + std::to_string(e) + " has no color");
    assigned[chosen].push_back(e);
    for (Vertex v : H.edges[e]) touched[chosen][v] = 1;
    cover[chosen] += H.edge_size(e);
  }

  // Combine and absorb (smallness route: additions per class are small).
  std::vector<std::vector<EdgeId>> combined(t);
  std::vector<AbsorbTag> tags(t, AbsorbTag::Smallness);
  for (int i = 0; i < t; ++i) {
    combined[i] = Mc[i];
    combined[i].insert(combined[i].end(), assigned[i].begin(),
                       assigned[i].end());
  }
  auto extended = absorb_small_typical(H, combined, tags, R, S, p, seed ^ 0xabcdef);
  // Containment scan: everything added beyond Mc is H_rem or reservoir.
  std::unordered_set<EdgeId> rem(H_rem.begin(), H_rem.end()),
      res(R.edges.begin(), R.edges.end());
  for (int i = 0; i < t; ++i) {
    std::unordered_set<EdgeId> base(Mc[i].begin(), Mc[i].end());
    for (EdgeId e : extended[i])
      if (!base.count(e) && !rem.count(e) && !res.count(e))
        throw Error("InternalError", "leftover extension outside H_rem + R");
  }
  return extended;
}

}  // namespace efl
