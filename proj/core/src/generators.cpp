#include "efl/generators.hpp"

#include "efl/hypercore.hpp"

#include <array>
#include <map>
#include <numeric>
#include <unordered_set>

namespace efl {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

int64_t pair_key(int n, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return static_cast<int64_t>(a) * n + b;
}

// Greedy near-regular r-uniform packing engine.
//
// Adds r-subsets ("edges") over vertices [0,n) with all pairwise vertex
// pairs fresh, trying to raise every degree to exactly `target` without ever
// exceeding `cap`.  Random sampling first, deterministic low-degree scan as
// fallback.  Returns achieved degrees.
std::vector<int> pack_near_regular(int n, int r, int target, int cap, Rng& rng,
                                   std::vector<Edge>& out,
                                   std::unordered_set<int64_t>* shared_pairs) {
  std::vector<int> deg(n, 0);
  if (target <= 0 || n < r) return deg;
  std::unordered_set<int64_t> local_pairs;
  auto& pairs = shared_pairs ? *shared_pairs : local_pairs;
  auto pair_ok = [&](Vertex a, Vertex b) {
    return !pairs.count(pair_key(n, a, b));
  };

  std::vector<char> stuck(n, 0);
  // Vertices in need, cheapest first.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);

  auto build_edge_for = [&](Vertex v) -> bool {
    // Candidate pool: below target preferred, then below cap.
    for (int relax = 0; relax < 2; ++relax) {
      int limit = relax == 0 ? target : cap;
      std::vector<Vertex> pool;
      pool.reserve(n);
      for (Vertex u = 0; u < n; ++u)
        if (u != v && deg[u] < limit && pair_ok(v, u)) pool.push_back(u);
      if (static_cast<int>(pool.size()) < r - 1) continue;
      // Random attempts.
      Edge e{v};
      for (int attempt = 0; attempt < 60; ++attempt) {
        e.resize(1);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (Vertex u : pool) {
          bool ok = true;
          for (size_t i = 1; i < e.size() && ok; ++i)
            if (!pair_ok(e[i], u)) ok = false;
          if (ok) {
            e.push_back(u);
            if (static_cast<int>(e.size()) == r) break;
          }
        }
        if (static_cast<int>(e.size()) == r) {
          for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j)
              pairs.insert(pair_key(n, e[i], e[j]));
          for (Vertex u : e) ++deg[u];
          std::sort(e.begin(), e.end());
          out.push_back(e);
          return true;
        }
      }
      // Deterministic scan, lowest degree first.
      std::sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) {
        return deg[a] != deg[b] ? deg[a] < deg[b] : a < b;
      });
      e.assign(1, v);
      for (Vertex u : pool) {
        bool ok = true;
        for (size_t i = 1; i < e.size() && ok; ++i)
          if (!pair_ok(e[i], u)) ok = false;
        if (ok) {
          e.push_back(u);
          if (static_cast<int>(e.size()) == r) break;
        }
      }
      if (static_cast<int>(e.size()) == r) {
        for (size_t i = 0; i < e.size(); ++i)
          for (size_t j = i + 1; j < e.size(); ++j)
            pairs.insert(pair_key(n, e[i], e[j]));
        for (Vertex u : e) ++deg[u];
        std::sort(e.begin(), e.end());
        out.push_back(e);
        return true;
      }
    }
    return false;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return deg[a] != deg[b] ? deg[a] < deg[b] : a < b;
    });
    for (Vertex v : order) {
      if (stuck[v] || deg[v] >= target) continue;
      if (build_edge_for(v))
        progress = true;
      else
        stuck[v] = 1;
    }
  }
  return deg;
}

}  // namespace

LinearHypergraph projective_plane(int q) {
  if (!is_prime(q)) throw Error("NotPrime", "order must be prime");
  // Points = normalized nonzero triples over GF(q); lines = orthogonal sets.
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (int a = 0; a < q; ++a) pts.push_back({0, 1, a});
  pts.push_back({0, 0, 1});
  int n = static_cast<int>(pts.size());  // q^2 + q + 1
  std::vector<Edge> lines;
  for (const auto& L : pts) {
    Edge line;
    for (int p = 0; p < n; ++p) {
      int dot = (pts[p][0] * L[0] + pts[p][1] * L[1] + pts[p][2] * L[2]) % q;
      if (dot == 0) line.push_back(p);
    }
    lines.push_back(std::move(line));
  }
  return build(n, std::move(lines));
}

LinearHypergraph degenerate_plane(int n) {
  if (n < 3) throw Error("InfeasibleParams", "degenerate plane needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  Edge big;
  for (Vertex v = 1; v < n; ++v) big.push_back(v);
  edges.push_back(std::move(big));
  return build(n, std::move(edges));
}

LinearHypergraph complete_graph(int n) {
  if (n < 1) throw Error("InfeasibleParams", "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  return build(n, std::move(edges));
}

LinearHypergraph random_linear(int n, const SizeLaw& law, int m, uint64_t seed) {
  if (n < 2 || m < 0) throw Error("InfeasibleParams", "bad n or m");
  for (auto [s, w] : law.weights)
    if (s < 2 || s > n || w < 0)
      throw Error("InfeasibleParams", "bad size law entry");
  Rng rng(seed);
  std::vector<double> w;
  std::vector<int> sizes;
  for (auto [s, wt] : law.weights) {
    sizes.push_back(s);
    w.push_back(wt);
  }
  std::discrete_distribution<int> pick_size(w.begin(), w.end());
  std::uniform_int_distribution<Vertex> pick_v(0, n - 1);

  std::unordered_set<int64_t> pairs;
  std::vector<Edge> edges;
  int64_t attempts_left = 50LL * std::max(m, 1);
  while (static_cast<int>(edges.size()) < m && attempts_left-- > 0) {
    int k = sizes[pick_size(rng)];
    Edge e;
    std::unordered_set<Vertex> used;
    while (static_cast<int>(e.size()) < k) {
      Vertex v = pick_v(rng);
      if (used.insert(v).second) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    bool ok = true;
    for (size_t i = 0; i < e.size() && ok; ++i)
      for (size_t j = i + 1; j < e.size() && ok; ++j)
        if (pairs.count(pair_key(n, e[i], e[j]))) ok = false;
    if (!ok) continue;
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j)
        pairs.insert(pair_key(n, e[i], e[j]));
    edges.push_back(std::move(e));
  }
  return build(n, std::move(edges));
}

LinearHypergraph uniform_near_regular(int n, int r, int D, double kappa,
                                      uint64_t seed, DegreeSpread* spread) {
  if (n < 1 || r < 2 || D < 0 || kappa < 0)
    throw Error("InfeasibleParams", "bad parameters");
  if (D > 0 && (r - 1.0) * D > (1.0 + kappa) * (n - 1))
    throw Error("InfeasibleParams", "rD exceeds linear capacity");
  Rng rng(seed);
  std::vector<Edge> edges;
  int cap = static_cast<int>((1.0 + kappa) * D);
  auto deg = pack_near_regular(n, r, D, cap, rng, edges, nullptr);
  int mn = D, mx = 0;
  if (n > 0) {
    mn = *std::min_element(deg.begin(), deg.end());
    mx = *std::max_element(deg.begin(), deg.end());
  }
  if (spread) *spread = {mn, mx};
  double lo = (1.0 - kappa) * D;
  if (mn < lo)
    throw Error("DegreeSpreadUnreachable",
                "achieved degree spread [" + std::to_string(mn) + "," +
                    std::to_string(mx) + "] misses (1-kappa)D");
  return build(n, std::move(edges));
}

EmbedResult embed_uniform(const LinearHypergraph& H, int r, int D, int C) {
  if (r < 2 || D < 0 || C < 0) throw Error("InfeasibleParams", "bad parameters");
  for (EdgeId e = 0; e < H.edge_count(); ++e)
    if (H.edge_size(e) > r)
      throw Error("UniformityImpossible", "edge larger than r");
  for (Vertex v = 0; v < H.n; ++v)
    if (H.degree(v) > D) throw Error("InfeasibleParams", "degree above D");

  // Pad every edge to size r with fresh vertices (degree-1, used once).
  std::vector<Edge> base = H.edges;
  int nv = H.n;
  for (auto& e : base)
    while (static_cast<int>(e.size()) < r) e.push_back(nv++);
  int base_n = nv;

  // Deficient vertex classes need degree boosts via per-class designs living
  // on their clone sets across disjoint copies of the padded instance.
  std::vector<int> deg(base_n, 0);
  for (const auto& e : base)
    for (Vertex v : e) ++deg[v];
  std::vector<Vertex> deficient;
  for (Vertex v = 0; v < base_n; ++v)
    if (deg[v] < D - C) deficient.push_back(v);

  EmbedResult res;
  res.base_vertices = base_n;
  if (deficient.empty()) {
    res.copies = 1;
    res.H_unif = build(base_n, base);
    res.achieved_slack = 0;
    for (Vertex v = 0; v < base_n; ++v)
      res.achieved_slack = std::max(res.achieved_slack, D - deg[v]);
    return res;
  }

  // Enough clones for a linear packing of degree <= D and comfortable slack;
  // stays well inside the (r-1)^2 D^2 budget.
  int T = std::max({2 * r * D + 1, r * r + r + 1, r + 1});
  int64_t paper_cap = static_cast<int64_t>(r) * (r - 1) * (r - 1) *
                      static_cast<int64_t>(D) * D;
  if (paper_cap > 0 && T > paper_cap) T = static_cast<int>(paper_cap);
  res.copies = T;

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(T) * base.size());
  // Copy 0 keeps the original ids; copy c shifts by c*base_n.
  for (int c = 0; c < T; ++c)
    for (const auto& e : base) {
      Edge f;
      f.reserve(r);
      for (Vertex v : e) f.push_back(v + c * base_n);
      edges.push_back(std::move(f));
    }

  Rng rng(0x9e3779b97f4a7c15ull);
  for (Vertex v : deficient) {
    int target = D - deg[v];
    std::vector<Edge> design;
    pack_near_regular(T, r, target, target, rng, design, nullptr);
    for (const auto& de : design) {
      Edge f;
      f.reserve(r);
      for (int clone : de) f.push_back(v + clone * base_n);
      edges.push_back(std::move(f));
    }
  }

  res.H_unif = build(static_cast<int>(T) * base_n, std::move(edges));

  // Post-hoc (E2): every degree in [D-C, D]; degrees >= D-C preserved.
  int worst = 0;
  for (Vertex v = 0; v < res.H_unif.n; ++v) {
    int d = res.H_unif.degree(v);
    if (d > D) throw Error("SlackTooSmall", "degree exceeds D after embedding");
    if (d < D - C)
      throw Error("SlackTooSmall", "vertex " + std::to_string(v) +
                                       " stuck at degree " + std::to_string(d) +
                                       " < D-C");
    worst = std::max(worst, D - d);
  }
  res.achieved_slack = worst;

  // (E3) vertex budget.
  int64_t limit = static_cast<int64_t>(r) * (r - 1) * (r - 1) *
                  static_cast<int64_t>(D) * D * D * std::max(H.n, 1);
  if (limit > 0 && res.H_unif.n > limit)
    throw Error("SlackTooSmall", "vertex budget exceeded");
  return res;
}

}  // namespace efl
