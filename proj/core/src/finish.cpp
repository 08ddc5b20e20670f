#include "efl/finish.hpp"

#include "efl/hypercore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace efl {

namespace {

// Misra-Gries style edge coloring with a fixed palette of q colors.
// Returns per-edge colors or nullopt if an edge cannot be inserted (only
// possible when q <= Delta).
std::optional<std::vector<Color>> color_edges_fan(const SimpleGraph& G, int q,
                                                  const std::vector<int>& order) {
  int n = G.n, m = (int)G.edges.size();
  // at[v][c] = edge id colored c at v, or -1.
  std::vector<std::vector<int>> at(n, std::vector<int>(q, -1));
  std::vector<Color> col(m, kUncolored);

  auto free_color = [&](int v) -> int {
    for (int c = 0; c < q; ++c)
      if (at[v][c] == -1) return c;
    return -1;
  };
  auto other = [&](int e, int v) {
    return G.edges[e].first == v ? G.edges[e].second : G.edges[e].first;
  };
  auto set_color = [&](int e, int c) {
    auto [u, v] = G.edges[e];
    if (col[e] != kUncolored) {
      at[u][col[e]] = -1;
      at[v][col[e]] = -1;
    }
    col[e] = c;
    if (c != kUncolored) {
      at[u][c] = e;
      at[v][c] = e;
    }
  };

  for (int idx : order) {
    auto [u, v0] = G.edges[idx];
    // Build a maximal fan at u starting from v0.
    std::vector<int> fan_vertex{v0};
    std::vector<int> fan_edge{idx};
    std::vector<char> in_fan(n, 0);
    in_fan[v0] = 1;
    for (;;) {
      int last = fan_vertex.back();
      int d = free_color(last);
      if (d == -1) break;  // handled below via path inversion logic
      int e = at[u][d];
      if (e == -1 || in_fan[other(e, u)]) break;
      int w = other(e, u);
      fan_vertex.push_back(w);
      fan_edge.push_back(e);
      in_fan[w] = 1;
    }
    int c = free_color(u);
    int d = free_color(fan_vertex.back());
    if (c == -1 || d == -1) return std::nullopt;

    if (c != d) {
      // Invert the maximal cd-path starting at u (first edge colored d).
      int x = u, cur = d, prev_c = c;
      std::vector<int> path;
      while (true) {
        int e = at[x][cur];
        if (e == -1) break;
        path.push_back(e);
        x = other(e, x);
        std::swap(cur, prev_c);
      }
      // Uncolor first: recoloring in place would overwrite registry slots
      // still held by the neighboring path edges.
      std::vector<int> old(path.size());
      for (size_t i = 0; i < path.size(); ++i) old[i] = col[path[i]];
      for (int e : path) set_color(e, kUncolored);
      for (size_t i = 0; i < path.size(); ++i)
        set_color(path[i], old[i] == c ? d : c);
    }
    // After inversion, d is free on u (or c == d was already free).
    // Find the first fan prefix ending at w with d free on w; note the
    // inversion may have changed freeness inside the fan.
    int jsel = -1;
    for (int j = 0; j < (int)fan_vertex.size(); ++j) {
      int w = fan_vertex[j];
      if (at[w][d] == -1) {
        // Check the prefix is still a fan: color of fan_edge[i] free at
        // fan_vertex[i-1] for i<=j.
        bool ok = true;
        for (int i = 1; i <= j && ok; ++i) {
          int ce = col[fan_edge[i]];
          if (ce == kUncolored || at[fan_vertex[i - 1]][ce] != -1) ok = false;
        }
        if (ok) {
          jsel = j;
          break;
        }
      }
    }
    if (jsel == -1 || at[u][d] != -1) return std::nullopt;
    // Rotate the prefix fan: edge to fan_vertex[i] takes the color of the
    // edge to fan_vertex[i+1]; last one takes d.  Uncolor first for the same
    // registry reason as the path inversion.
    std::vector<int> shift(jsel + 1);
    for (int i = 0; i < jsel; ++i) shift[i] = col[fan_edge[i + 1]];
    shift[jsel] = d;
    for (int i = 0; i <= jsel; ++i) set_color(fan_edge[i], kUncolored);
    for (int i = 0; i <= jsel; ++i) set_color(fan_edge[i], shift[i]);
  }
  return col;
}

}  // namespace

std::optional<EdgeColoring> vizing_with_palette(const SimpleGraph& G, int q,
                                                uint64_t order_seed) {
  std::vector<int> order(G.edges.size());
  std::iota(order.begin(), order.end(), 0);
  if (order_seed != 0) {
    Rng rng(order_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  auto col = color_edges_fan(G, q, order);
  if (!col) return std::nullopt;
  EdgeColoring ec;
  ec.color = std::move(*col);
  ec.palette_size = q;
  return ec;
}

EdgeColoring vizing(const SimpleGraph& G) {
  std::vector<int> deg(G.n, 0);
  for (auto [u, v] : G.edges) {
    ++deg[u];
    ++deg[v];
  }
  int Delta = 0;
  for (int v = 0; v < G.n; ++v) Delta = std::max(Delta, deg[v]);
  if (G.edges.empty()) {
    EdgeColoring ec;
    ec.palette_size = 0;
    return ec;
  }
  int at_max = (int)std::count(deg.begin(), deg.end(), Delta);
  if (at_max <= 2) {
    for (uint64_t s : {0ull, 17ull, 40499ull}) {
      auto attempt = vizing_with_palette(G, Delta, s);
      if (attempt) return *attempt;
    }
  }
  auto full = vizing_with_palette(G, Delta + 1, 0);
  if (!full) throw Error("InternalError", "fan coloring failed with Delta+1 colors");
  return *full;
}

EdgeColoring hall_finish(const SimpleGraph& H, int palette,
                         const std::vector<std::vector<Color>>& forbidden,
                         const std::vector<int>& U, double delta) {
  int n = H.n, m = (int)H.edges.size();
  if ((int)forbidden.size() != n) throw Error("BadParam", "forbidden size mismatch");
  std::vector<std::vector<int>> inc(n);
  std::vector<int> deg(n, 0);
  for (int e = 0; e < m; ++e) {
    inc[H.edges[e].first].push_back(e);
    inc[H.edges[e].second].push_back(e);
    ++deg[H.edges[e].first];
    ++deg[H.edges[e].second];
  }
  // Hypotheses.
  if (palette < 7.0 * delta * n) throw Error("PreconditionUnmet", "|C| < 7 delta n");
  for (int v = 0; v < n; ++v) {
    if (deg[v] > palette - (int)forbidden[v].size())
      throw Error("PreconditionUnmet", "(i) d(w) <= |C|-|C_w| fails");
    if ((double)forbidden[v].size() > delta * n)
      throw Error("PreconditionUnmet", "(iii) |C_w| <= delta n fails");
  }
  if ((double)U.size() > delta * n)
    throw Error("PreconditionUnmet", "(ii) |U| <= delta n fails");
  {
    std::vector<char> inU(n, 0);
    for (int u : U) inU[u] = 1;
    for (auto [a, b] : H.edges)
      if (!inU[a] && !inU[b])
        throw Error("PreconditionUnmet", "(ii) U does not dominate all edges");
    std::vector<int> mult(palette, 0);
    for (int v = 0; v < n; ++v)
      for (Color c : forbidden[v])
        if (++mult[c] > delta * n)
          throw Error("PreconditionUnmet", "(iv) per-color multiplicity fails");
  }

  EdgeColoring ec;
  ec.color.assign(m, kUncolored);
  ec.palette_size = palette;
  std::vector<std::vector<char>> fb(n, std::vector<char>(palette, 0));
  for (int v = 0; v < n; ++v)
    for (Color c : forbidden[v]) fb[v][c] = 1;
  // used[v][c] = 1 once an edge at v got color c.
  std::vector<std::vector<char>> used(n, std::vector<char>(palette, 0));

  for (int ui : U) {
    std::vector<int> A;  // uncolored edges at ui
    for (int e : inc[ui])
      if (ec.color[e] == kUncolored) A.push_back(e);
    if (A.empty()) continue;
    std::vector<Color> B;
    for (Color c = 0; c < palette; ++c)
      if (!fb[ui][c] && !used[ui][c]) B.push_back(c);
    BipartiteGraph G2;
    G2.a_size = (int)A.size();
    G2.b_size = (int)B.size();
    G2.adj.assign(G2.a_size, {});
    for (int i = 0; i < G2.a_size; ++i) {
      int e = A[i];
      int v = H.edges[e].first == ui ? H.edges[e].second : H.edges[e].first;
      for (int j = 0; j < G2.b_size; ++j) {
        Color c = B[j];
        if (!fb[v][c] && !used[v][c]) G2.adj[i].push_back(j);
      }
    }
    std::vector<int> match;
    try {
      match = min_deg_bipartite_match(G2);
    } catch (const Error& err) {
      throw Error("MatchFailed", "star at vertex " + std::to_string(ui) + ": " +
                                     err.what());
    }
    for (int i = 0; i < G2.a_size; ++i) {
      int e = A[i];
      Color c = B[match[i]];
      ec.color[e] = c;
      used[H.edges[e].first][c] = 1;
      used[H.edges[e].second][c] = 1;
    }
  }
  return ec;
}

std::pair<int, std::vector<int>> dsatur_color(const std::vector<std::vector<int>>& adj) {
  int n = (int)adj.size();
  std::vector<int> color(n, -1), satdeg(n, 0);
  std::vector<std::vector<char>> neighbor_colors(n);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      if (best == -1 || satdeg[v] > satdeg[best] ||
          (satdeg[v] == satdeg[best] && adj[v].size() > adj[best].size()))
        best = v;
    }
    std::vector<char> taken(used + 1, 0);
    for (int w : adj[best])
      if (color[w] != -1 && color[w] <= used) taken[color[w]] = 1;
    int c = 0;
    while (c < (int)taken.size() && taken[c]) ++c;
    color[best] = c;
    used = std::max(used, c + 1);
    for (int w : adj[best]) {
      if (color[w] != -1) continue;
      auto& nc = neighbor_colors[w];
      if ((int)nc.size() <= c) nc.resize(c + 1, 0);
      if (!nc[c]) {
        nc[c] = 1;
        ++satdeg[w];
      }
    }
  }
  return {used, color};
}

namespace {

// k-colorability of an adjacency structure by DFS with a node budget.
// Requires k <= 64 (color masks).  Returns assignment or nullopt; sets
// *budget_hit when the search gave up.
std::optional<std::vector<int>> k_color_search(
    const std::vector<std::vector<int>>& adj, int k, int64_t budget,
    bool* budget_hit) {
  int n = (int)adj.size();
  *budget_hit = false;
  if (k > 64) {
    *budget_hit = true;
    return std::nullopt;
  }
  // Order: descending degree.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return adj[a].size() != adj[b].size() ? adj[a].size() > adj[b].size() : a < b;
  });
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<int> color(n, -1);
  std::vector<uint64_t> forbid(n, 0);
  int64_t nodes = 0;
  std::function<bool(int, int)> rec = [&](int i, int maxused) -> bool {
    if (i == n) return true;
    if (++nodes > budget) {
      *budget_hit = true;
      return false;
    }
    int v = order[i];
    int cap = std::min(k, maxused + 1);  // symmetry breaking
    for (int c = 0; c < cap; ++c) {
      if ((forbid[v] >> c) & 1) continue;
      color[v] = c;
      std::vector<int> touched;
      for (int w : adj[v])
        if (color[w] == -1 && !((forbid[w] >> c) & 1)) {
          forbid[w] |= 1ull << c;
          touched.push_back(w);
        }
      if (rec(i + 1, std::max(maxused, c + 1))) return true;
      if (*budget_hit) return false;
      for (int w : touched) forbid[w] &= ~(1ull << c);
      color[v] = -1;
    }
    return false;
  };
  if (rec(0, 0)) return color;
  return std::nullopt;
}

}  // namespace

ExactResult exact_chromatic_index(const LinearHypergraph& H, int edge_limit,
                                  int64_t node_budget) {
  int m = H.edge_count();
  bool is_graph = true;
  for (EdgeId e = 0; e < m; ++e)
    if (H.edge_size(e) != 2) is_graph = false;
  if (!is_graph && m > edge_limit)
    throw Error("BudgetExceeded", "instance above the exact-oracle edge limit");

  auto adj = line_graph(H);
  // Clique lower bound: all edges at one vertex pairwise intersect.
  int lb = 0;
  for (Vertex v = 0; v < H.n; ++v) lb = std::max(lb, H.degree(v));
  if (m >= 1) lb = std::max(lb, 1);
  auto [ub, dcol] = dsatur_color(adj);
  if (is_graph) lb = std::max(lb, ub - 1);  // Vizing: chi' in {Delta, Delta+1}

  ExactResult res;
  res.col.color.assign(m, 0);
  if (m == 0) {
    res.chi = 0;
    res.col.palette_size = 0;
    return res;
  }
  std::vector<int> bestcol = dcol;
  int best = ub;
  for (int k = lb; k < best; ++k) {
    bool hit = false;
    auto got = k_color_search(adj, k, node_budget, &hit);
    if (hit)
      throw Error("BudgetExceeded", "bounds [" + std::to_string(lb) + "," +
                                        std::to_string(best) + "]");
    if (got) {
      best = k;
      bestcol = *got;
      break;
    }
  }
  res.chi = best;
  res.col.color = bestcol;
  res.col.palette_size = best;
  return res;
}

DeltaColorResult delta_edge_color(const SimpleGraph& G, double p, double eps_reg,
                                  uint64_t seed) {
  DeltaColorResult res;
  std::vector<int> deg(G.n, 0);
  for (auto [u, v] : G.edges) {
    ++deg[u];
    ++deg[v];
  }
  int Delta = 0;
  for (int d : deg) Delta = std::max(Delta, d);
  res.max_degree = Delta;
  if (G.edges.empty()) {
    res.applicable = true;
    res.col.palette_size = 0;
    return res;
  }

  int below = 0;
  for (int d : deg)
    if (d < Delta) ++below;
  bool hypotheses = below >= Delta;

  // Sampled lower regularity: e(S,T) >= (p - eps) |S| |T|.
  if (hypotheses && G.n >= 8) {
    std::vector<Bitset> nb(G.n, Bitset(G.n));
    for (auto [u, v] : G.edges) {
      nb[u].set(v);
      nb[v].set(u);
    }
    Rng rng(seed);
    int s_min = std::max(1, (int)std::ceil(eps_reg * G.n));
    std::vector<int> perm(G.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 200 && hypotheses; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::uniform_int_distribution<int> size_dist(s_min, std::max(s_min, G.n / 2));
      int sa = size_dist(rng), sb = size_dist(rng);
      if (sa + sb > G.n) continue;
      Bitset T(G.n);
      for (int i = sa; i < sa + sb; ++i) T.set(perm[i]);
      int64_t cnt = 0;
      for (int i = 0; i < sa; ++i) cnt += nb[perm[i]].count_and(T);
      if (cnt < (p - eps_reg) * sa * sb - 1e-9) hypotheses = false;
    }
  }

  if (hypotheses) {
    if (G.n <= 14) {
      // Exact search on the line graph.
      std::vector<Edge> edges;
      for (auto [u, v] : G.edges) edges.push_back({u, v});
      auto H = build(G.n, edges);
      auto lgadj = line_graph(H);
      bool hit = false;
      auto got = k_color_search(lgadj, Delta, 20'000'000, &hit);
      if (got) {
        res.applicable = true;
        res.col.color = *got;
        res.col.palette_size = Delta;
        return res;
      }
    } else {
      for (uint64_t s : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        auto attempt = vizing_with_palette(G, Delta, seed ^ s);
        if (attempt) {
          res.applicable = true;
          res.col = *attempt;
          return res;
        }
      }
    }
  }
  res.applicable = false;
  res.col = vizing(G);
  return res;
}

}  // namespace efl
