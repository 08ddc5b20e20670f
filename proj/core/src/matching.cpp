#include "efl/matching.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>

namespace efl {

namespace {

// Kuhn augmenting search.
bool try_augment(const BipartiteGraph& G, int a, std::vector<int>& match_a,
                 std::vector<int>& match_b, std::vector<char>& visited_b) {
  for (int b : G.adj[a]) {
    if (visited_b[b]) continue;
    visited_b[b] = 1;
    if (match_b[b] == -1 ||
        try_augment(G, match_b[b], match_a, match_b, visited_b)) {
      match_a[a] = b;
      match_b[b] = a;
      return true;
    }
  }
  return false;
}

}  // namespace

HallResult hall_bipartite(const BipartiteGraph& G) {
  HallResult res;
  res.match_a.assign(G.a_size, -1);
  std::vector<int> match_b(G.b_size, -1);
  std::vector<char> visited_b(G.b_size, 0);
  for (int a = 0; a < G.a_size; ++a) {
    std::fill(visited_b.begin(), visited_b.end(), 0);
    if (!try_augment(G, a, res.match_a, match_b, visited_b) &&
        res.violator.empty()) {
      // Alternating tree from a: visited B plus their mates, plus a itself.
      res.violator.push_back(a);
      for (int b = 0; b < G.b_size; ++b)
        if (visited_b[b] && match_b[b] != -1) res.violator.push_back(match_b[b]);
      std::sort(res.violator.begin(), res.violator.end());
    }
  }
  return res;
}

std::vector<int> crossing_match(const BipartiteGraph& G, double rho, double xi,
                                int n_ambient, bool* used_fallback) {
  if (used_fallback) *used_fallback = false;
  bool degree_ok = true;
  for (int a = 0; a < G.a_size; ++a)
    if (G.adj[a].size() < 2.0 * rho * G.a_size) degree_ok = false;
  if (!degree_ok && used_fallback) *used_fallback = true;

  if (G.a_size < xi * n_ambient / std::max(rho, 1e-12)) {
    // Small side: greedy suffices per the lemma's own fallback.
    std::vector<int> match(G.a_size, -1);
    std::vector<char> used_b(G.b_size, 0);
    bool ok = true;
    for (int a = 0; a < G.a_size; ++a) {
      for (int b : G.adj[a])
        if (!used_b[b]) {
          used_b[b] = 1;
          match[a] = b;
          break;
        }
      if (match[a] == -1) ok = false;
    }
    if (ok) return match;
    if (used_fallback) *used_fallback = true;
  }
  auto hr = hall_bipartite(G);
  if (!hr.violator.empty())
    throw Error("PreconditionUnmet", "no matching covers A");
  return hr.match_a;
}

std::vector<std::pair<int, int>> dense_perfect_match(const SimpleGraph& G,
                                                     int retries, uint64_t seed) {
  if (G.n % 2 != 0) throw Error("PreconditionUnmet", "odd order");
  if (G.n == 0) return {};
  std::vector<std::vector<int>> adj(G.n);
  for (auto [u, v] : G.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Rng rng(seed);
  std::vector<int> perm(G.n);
  std::iota(perm.begin(), perm.end(), 0);
  int h = G.n / 2;
  for (int t = 0; t < retries; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> side(G.n, -1);  // 0 -> index in A, 1 -> index in B
    std::vector<int> a_of(h), b_of(h);
    for (int i = 0; i < h; ++i) {
      a_of[i] = perm[i];
      b_of[i] = perm[h + i];
    }
    std::vector<int> b_index(G.n, -1);
    for (int i = 0; i < h; ++i) b_index[b_of[i]] = i;
    BipartiteGraph B;
    B.a_size = B.b_size = h;
    B.adj.assign(h, {});
    for (int i = 0; i < h; ++i)
      for (int w : adj[a_of[i]])
        if (b_index[w] != -1) B.adj[i].push_back(b_index[w]);
    auto hr = hall_bipartite(B);
    if (hr.violator.empty()) {
      std::vector<std::pair<int, int>> M;
      for (int i = 0; i < h; ++i) M.emplace_back(a_of[i], b_of[hr.match_a[i]]);
      return M;
    }
  }
  if (G.n <= 20) {
    // Exhaustive: match the lowest unmatched vertex with each neighbor.
    std::vector<int> mate(G.n, -1);
    std::vector<std::pair<int, int>> M;
    std::vector<Bitset> nb(G.n, Bitset(G.n));
    for (auto [u, v] : G.edges) {
      nb[u].set(v);
      nb[v].set(u);
    }
    std::function<bool()> rec = [&]() -> bool {
      int u = -1;
      for (int v = 0; v < G.n; ++v)
        if (mate[v] == -1) {
          u = v;
          break;
        }
      if (u == -1) return true;
      for (int v = u + 1; v < G.n; ++v) {
        if (mate[v] != -1 || !nb[u].test(v)) continue;
        mate[u] = v;
        mate[v] = u;
        if (rec()) {
          M.emplace_back(u, v);
          return true;
        }
        mate[u] = mate[v] = -1;
      }
      return false;
    };
    if (rec()) return M;
    throw Error("NoPerfectMatching", "exhaustive search found none");
  }
  throw Error("RetriesExhausted", "random bipartition retries exhausted");
}

std::vector<int> min_deg_bipartite_match(const BipartiteGraph& G) {
  if (G.a_size > G.b_size) throw Error("PreconditionUnmet", "|A| > |B|");
  int da = G.a_size == 0 ? 0 : G.b_size;
  for (int a = 0; a < G.a_size; ++a) da = std::min(da, (int)G.adj[a].size());
  std::vector<int> degb(G.b_size, 0);
  for (int a = 0; a < G.a_size; ++a)
    for (int b : G.adj[a]) ++degb[b];
  int db = G.b_size == 0 ? 0 : G.a_size;
  for (int b = 0; b < G.b_size; ++b) db = std::min(db, degb[b]);
  if (G.a_size > 0 && da + db < G.a_size)
    throw Error("PreconditionUnmet", "delta_A + delta_B < |A|");
  auto hr = hall_bipartite(G);
  if (!hr.violator.empty())
    throw Error("MatchFailed", "matching missing despite degree hypothesis");
  return hr.match_a;
}

// ---------------------------------------------------------------------------
// Dinic max-flow (with lower bounds handled by the caller transformation).
// ---------------------------------------------------------------------------
namespace {

struct Dinic {
  struct Arc {
    int to, rev;
    int cap;
  };
  std::vector<std::vector<Arc>> g;
  std::vector<int> level, it;

  explicit Dinic(int n) : g(n), level(n), it(n) {}

  void add(int u, int v, int cap) {
    g[u].push_back({v, (int)g[v].size(), cap});
    g[v].push_back({u, (int)g[u].size() - 1, 0});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto& a : g[u])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& i = it[u]; i < (int)g[u].size(); ++i) {
      auto& a = g[u][i];
      if (a.cap > 0 && level[a.to] == level[u] + 1) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          g[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      int f;
      while ((f = dfs(s, t, 1 << 30)) > 0) flow += f;
    }
    return flow;
  }
};

bool degrees_ok(const std::vector<int>& deg, const std::vector<int>& g,
                const std::vector<int>& f) {
  for (size_t v = 0; v < deg.size(); ++v)
    if (deg[v] < g[v] || deg[v] > f[v]) return false;
  return true;
}

// Alternating-walk repair: toggles edge subsets to fix degree-window
// violations one unit at a time.  Exact on graphs without odd obstructions;
// callers fall back to exhaustive search when it stalls.
bool repair(const SimpleGraph& G, std::vector<char>& chosen,
            std::vector<int>& deg, const std::vector<int>& g,
            const std::vector<int>& f) {
  int m = (int)G.edges.size();
  std::vector<std::vector<int>> inc(G.n);
  for (int e = 0; e < m; ++e) {
    inc[G.edges[e].first].push_back(e);
    inc[G.edges[e].second].push_back(e);
  }
  auto other = [&](int e, int v) {
    return G.edges[e].first == v ? G.edges[e].second : G.edges[e].first;
  };

  for (int guard = 0; guard < 4 * G.n + 8; ++guard) {
    int start = -1, want = 0;  // want=+1: deficit (add edge first); -1: excess
    for (int v = 0; v < G.n; ++v) {
      if (deg[v] < g[v]) { start = v; want = +1; break; }
      if (deg[v] > f[v]) { start = v; want = -1; break; }
    }
    if (start == -1) return true;

    // BFS over (vertex, nextEdgeState): nextEdgeState=1 means next toggled
    // edge must currently be OFF (will be added), 0 means ON (removed).
    struct Node { int v; int s; };
    std::vector<std::array<int, 2>> par_edge(G.n, {-1, -1});
    std::vector<std::array<char, 2>> seen(G.n, {0, 0});
    std::deque<Node> q;
    int s0 = want == +1 ? 1 : 0;
    seen[start][s0] = 1;
    q.push_back({start, s0});
    int end_v = -1, end_s = -1;
    while (!q.empty() && end_v == -1) {
      auto [v, s] = q.front();
      q.pop_front();
      // Stop condition: after arriving at v by toggling an edge (tracked via
      // parent), v's degree changed by +1 (if that edge was added) or -1.
      for (int e : inc[v]) {
        bool on = chosen[e];
        if ((s == 1 && on) || (s == 0 && !on)) continue;
        int w = other(e, v);
        // Toggling e changes deg[w] by +1 (s==1) or -1 (s==0).
        if (s == 1 && deg[w] < f[w] && !(w == start && want == +1)) {
          // w can absorb a +1: done.
          par_edge[w][0] = e;  // record terminal via state 0 slot
          end_v = w;
          end_s = 0;
          // reconstruct below
          seen[w][0] = 1;
          par_edge[w][0] = e;
          break;
        }
        if (s == 0 && deg[w] > g[w] && !(w == start && want == -1)) {
          par_edge[w][1] = e;
          end_v = w;
          end_s = 1;
          seen[w][1] = 1;
          break;
        }
        int ns = 1 - s;
        if (!seen[w][ns]) {
          seen[w][ns] = 1;
          par_edge[w][ns] = e;
          q.push_back({w, ns});
        }
      }
    }
    if (end_v == -1) return false;
    // Walk back toggling edges.
    int v = end_v, s = end_s;
    while (!(v == start && ((want == +1 && s == 1) || (want == -1 && s == 0)))) {
      int e = par_edge[v][s];
      if (e < 0) return false;
      int w = other(e, v);
      chosen[e] = !chosen[e];
      int dlt = chosen[e] ? +1 : -1;
      deg[v] += dlt;
      deg[w] += dlt;
      v = w;
      s = 1 - s;
    }
  }
  return degrees_ok(deg, g, f);
}

}  // namespace

std::optional<std::vector<std::pair<int, int>>> gf_factor_exhaustive(
    const SimpleGraph& G, const std::vector<int>& g, const std::vector<int>& f) {
  int m = (int)G.edges.size();
  std::vector<int> deg(G.n, 0), remaining(G.n, 0);
  for (auto [u, v] : G.edges) {
    ++remaining[u];
    ++remaining[v];
  }
  std::vector<char> chosen(m, 0);
  std::function<bool(int)> rec = [&](int e) -> bool {
    if (e == m) {
      for (int v = 0; v < G.n; ++v)
        if (deg[v] < g[v] || deg[v] > f[v]) return false;
      return true;
    }
    auto [u, v] = G.edges[e];
    --remaining[u];
    --remaining[v];
    // Option 1: take the edge.
    if (deg[u] < f[u] && deg[v] < f[v]) {
      ++deg[u];
      ++deg[v];
      chosen[e] = 1;
      if (deg[u] + remaining[u] >= g[u] && deg[v] + remaining[v] >= g[v] &&
          rec(e + 1))
        return true;
      chosen[e] = 0;
      --deg[u];
      --deg[v];
    }
    // Option 2: skip.
    if (deg[u] + remaining[u] >= g[u] && deg[v] + remaining[v] >= g[v] &&
        rec(e + 1))
      return true;
    ++remaining[u];
    ++remaining[v];
    return false;
  };
  if (!rec(0)) return std::nullopt;
  std::vector<std::pair<int, int>> F;
  for (int e = 0; e < m; ++e)
    if (chosen[e]) F.push_back(G.edges[e]);
  return F;
}

std::vector<std::pair<int, int>> gf_factor(const SimpleGraph& G,
                                           const std::vector<int>& g,
                                           const std::vector<int>& f) {
  int n = G.n, m = (int)G.edges.size();
  if ((int)g.size() != n || (int)f.size() != n)
    throw Error("BadParam", "g/f size mismatch");
  std::vector<int> full_deg(n, 0);
  for (auto [u, v] : G.edges) {
    ++full_deg[u];
    ++full_deg[v];
  }
  for (int v = 0; v < n; ++v) {
    if (g[v] < 0 || g[v] > f[v]) throw Error("BadParam", "need 0 <= g <= f");
    if (g[v] > full_deg[v])
      throw Error("Infeasible", "g exceeds degree at vertex " + std::to_string(v));
  }

  // Bipartite double cover flow with lower bounds.  Nodes: S, T, left
  // copies [2, 2+n), right copies [2+n, 2+2n), plus SS/TT for the
  // lower-bound transformation.
  int S = 0, T = 1, L = 2, R = 2 + n, SS = 2 + 2 * n, TT = 3 + 2 * n;
  Dinic din(4 + 2 * n);
  std::vector<int> excess(2 + 2 * n, 0);
  auto add_lb = [&](int u, int v, int lo, int hi) {
    din.add(u, v, hi - lo);
    excess[v] += lo;
    excess[u] -= lo;
  };
  for (int v = 0; v < n; ++v) {
    add_lb(S, L + v, g[v], f[v]);
    add_lb(R + v, T, g[v], f[v]);
  }
  // Arc ids per cover edge for extraction.
  std::vector<std::pair<int, int>> arc_pos(2 * m);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = G.edges[e];
    arc_pos[2 * e] = {L + u, (int)din.g[L + u].size()};
    din.add(L + u, R + v, 1);
    arc_pos[2 * e + 1] = {L + v, (int)din.g[L + v].size()};
    din.add(L + v, R + u, 1);
  }
  din.add(T, S, 1 << 29);
  int need = 0;
  for (int v = 0; v < 2 + 2 * n; ++v) {
    if (excess[v] > 0) {
      din.add(SS, v, excess[v]);
      need += excess[v];
    } else if (excess[v] < 0) {
      din.add(v, TT, -excess[v]);
    }
  }
  int got = din.max_flow(SS, TT);
  if (got < need) {
    // The double cover is a relaxation: its infeasibility certifies the
    // original problem infeasible.
    throw Error("Infeasible", "lower-bound flow unsatisfiable (cut certificate)");
  }

  // Extract x_e in {0, 1/2, 1}: arc used iff residual capacity is zero.
  std::vector<char> chosen(m, 0);
  std::vector<int> half;
  std::vector<int> deg(n, 0);
  for (int e = 0; e < m; ++e) {
    int used = 0;
    for (int k = 0; k < 2; ++k) {
      auto [node, idx] = arc_pos[2 * e + k];
      if (din.g[node][idx].cap == 0) ++used;
    }
    if (used == 2) {
      chosen[e] = 1;
      ++deg[G.edges[e].first];
      ++deg[G.edges[e].second];
    } else if (used == 1) {
      half.push_back(e);
    }
  }
  // Round half edges along trails, alternating keep/drop so interior
  // vertices keep their fractional contribution.
  {
    std::vector<std::vector<std::pair<int, int>>> hadj(n);  // (edge, other)
    for (int e : half) {
      auto [u, v] = G.edges[e];
      hadj[u].push_back({e, v});
      hadj[v].push_back({e, u});
    }
    std::vector<char> used(m, 0);
    auto walk = [&](int s) {
      int v = s;
      bool keep = true;
      for (;;) {
        int e = -1, w = -1;
        while (!hadj[v].empty()) {
          auto [ce, cw] = hadj[v].back();
          hadj[v].pop_back();
          if (!used[ce]) {
            e = ce;
            w = cw;
            break;
          }
        }
        if (e == -1) break;
        used[e] = 1;
        if (keep) {
          chosen[e] = 1;
          ++deg[G.edges[e].first];
          ++deg[G.edges[e].second];
        }
        keep = !keep;
        v = w;
      }
    };
    // Odd-degree endpoints first, then whatever remains.
    for (int v = 0; v < n; ++v)
      if (hadj[v].size() % 2 == 1) walk(v);
    for (int v = 0; v < n; ++v) walk(v);
  }

  if (!degrees_ok(deg, g, f)) {
    if (!repair(G, chosen, deg, g, f)) {
      if (n <= 16 || m <= 30) {
        auto exact = gf_factor_exhaustive(G, g, f);
        if (!exact) throw Error("Infeasible", "no degree-window subgraph exists");
        return *exact;
      }
      throw Error("FactorSearchFailed", "rounding repair stalled");
    }
  }
  std::vector<std::pair<int, int>> F;
  for (int e = 0; e < m; ++e)
    if (chosen[e]) F.push_back(G.edges[e]);
  return F;
}

std::vector<int> general_max_matching(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> match(n, -1), p(n, -1), base(n), q;
  std::vector<char> used(n, 0), blossom(n, 0);

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = p[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = p[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = 1;
      blossom[base[match[v]]] = 1;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  };
  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), 0);
    std::fill(p.begin(), p.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    q.clear();
    q.push_back(root);
    used[root] = 1;
    for (size_t qi = 0; qi < q.size(); ++qi) {
      int v = q[qi];
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
          int curbase = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = 1;
                q.push_back(i);
              }
            }
        } else if (p[to] == -1) {
          p[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          q.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int u = find_path(v);
    while (u != -1) {
      int pv = p[u], ppv = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = ppv;
    }
  }
  return match;
}

}  // namespace efl
