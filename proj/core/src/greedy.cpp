#include "efl/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "efl/extremal.hpp"
#include "efl/hypercore.hpp"

namespace efl {

namespace {

bool edges_intersect(const Edge& a, const Edge& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

// Greedy pass with a per-class vertex-cover cap: a color can be shared only
// while its class covers fewer than `cap` vertices.  Colors are drawn from
// [base, inf); returns one past the last color used.
Color capped_greedy(const LinearHypergraph& H,
                    const std::vector<std::vector<EdgeId>>& lg,
                    const std::vector<EdgeId>& order, EdgeColoring& ec,
                    Color base, double cap) {
  std::vector<long long> covered;
  std::vector<int> uses;
  for (EdgeId e : order) {
    std::set<Color> banned;
    for (EdgeId f : lg[e])
      if (ec.color[f] != kUncolored) banned.insert(ec.color[f]);
    Color chosen = kUncolored;
    for (Color c = base; c < base + (Color)covered.size(); ++c) {
      if (banned.count(c)) continue;
      if ((double)covered[c - base] + H.edge_size(e) > cap) continue;
      chosen = c;
      break;
    }
    if (chosen == kUncolored) {
      chosen = base + (Color)covered.size();
      covered.push_back(0);
      uses.push_back(0);
    }
    ec.color[e] = chosen;
    covered[chosen - base] += H.edge_size(e);
    ++uses[chosen - base];
  }
  return base + (Color)covered.size();
}

}  // namespace

EdgeColoring list_greedy(const LinearHypergraph& H, const EdgeOrdering& ord,
                         const ListAssignment& lists, double alpha1,
                         double alpha2) {
  int m = H.edge_count();
  if ((int)ord.perm.size() != m || (int)lists.allowed.size() != m)
    throw Error("BadParam", "ordering or list-assignment size mismatch");
  (void)alpha1;  // slack parameter: documented precondition, enforced by throw
  EdgeColoring ec;
  ec.color.assign(m, kUncolored);
  ec.palette_size = lists.palette_size;
  auto lg = line_graph(H);
  std::vector<long long> covered(lists.palette_size, 0);
  std::vector<int> uses(lists.palette_size, 0);
  double cap = alpha2 * H.n;
  for (EdgeId e : ord.perm) {
    std::vector<char> banned(lists.palette_size, 0);
    for (EdgeId f : lg[e])
      if (ec.color[f] != kUncolored) banned[ec.color[f]] = 1;
    Color chosen = kUncolored;
    for (Color c : lists.allowed[e]) {
      if (c < 0 || c >= lists.palette_size)
        throw Error("BadParam", "list color outside palette");
      if (banned[c]) continue;
      // Sharing a class is allowed only while it stays alpha2-bounded.
      if (uses[c] > 0 && (double)covered[c] + H.edge_size(e) > cap) continue;
      chosen = c;
      break;
    }
    if (chosen == kUncolored)
      throw Error("ListExhausted",
                  "edge " + std::to_string(e) + " has no allowed color left");
    ec.color[e] = chosen;
    covered[chosen] += H.edge_size(e);
    ++uses[chosen];
  }
  return ec;
}

EdgeColoring split_bounded(const LinearHypergraph& H, const EdgeColoring& col,
                           double alpha, int r) {
  if (alpha <= 0 || r < 1) throw Error("BadParam", "need alpha > 0, r >= 1");
  int m = H.edge_count();
  if ((int)col.color.size() != m)
    throw Error("BadParam", "coloring size mismatch");
  if (verify_coloring(H, col))
    throw Error("PreconditionUnmet", "input coloring not proper");
  double cap = alpha * H.n;
  EdgeColoring out;
  out.color.assign(m, kUncolored);
  // Gather classes, then chunk oversized ones; chunk = subset, so refinement
  // and properness are automatic.
  std::vector<std::vector<EdgeId>> cls(col.palette_size);
  for (EdgeId e = 0; e < m; ++e) cls[col.color[e]].push_back(e);
  Color next = 0;
  for (auto& c : cls) {
    if (c.empty()) continue;
    size_t i = 0;
    while (i < c.size()) {
      Color mine = next++;
      long long cover = 0;
      // Single edge is always fine; otherwise cap the chunk's cover.
      out.color[c[i]] = mine;
      cover += H.edge_size(c[i]);
      ++i;
      while (i < c.size() && (double)cover + H.edge_size(c[i]) <= cap) {
        out.color[c[i]] = mine;
        cover += H.edge_size(c[i]);
        ++i;
      }
    }
  }
  out.palette_size = next;
  return out;
}

EdgeColoring color_medium(const LinearHypergraph& H, double gamma, int r0,
                          int r1) {
  int m = H.edge_count();
  for (EdgeId e = 0; e < m; ++e) {
    int s = H.edge_size(e);
    if (s <= r1 || s > r0)
      throw Error("PreconditionUnmet", "edge size outside (r1, r0]");
  }
  EdgeColoring ec;
  ec.color.assign(m, kUncolored);
  auto lg = line_graph(H);
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return H.edge_size(a) != H.edge_size(b) ? H.edge_size(a) > H.edge_size(b)
                                            : a < b;
  });
  ec.palette_size = capped_greedy(H, lg, order, ec, 0, gamma * H.n);
  // The gamma*n palette bound is promised only under the degree hypothesis.
  int max_deg = 0;
  for (Vertex v = 0; v < H.n; ++v) max_deg = std::max(max_deg, H.degree(v));
  if (r1 >= 2 && max_deg <= H.n / (r1 - 1) &&
      (double)ec.palette_size > gamma * H.n)
    throw Error("BudgetExceeded",
                "medium palette " + std::to_string(ec.palette_size) +
                    " exceeds gamma*n");
  return ec;
}

std::vector<Color> dsatur_color_adj(const std::vector<std::vector<int>>& adj) {
  int n = (int)adj.size();
  std::vector<Color> col(n, kUncolored);
  std::vector<std::set<Color>> sat(n);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = (int)adj[v].size();
  for (int it = 0; it < n; ++it) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (col[v] != kUncolored) continue;
      if (best == -1 || sat[v].size() > sat[best].size() ||
          (sat[v].size() == sat[best].size() && deg[v] > deg[best]))
        best = v;
    }
    Color c = 0;
    while (sat[best].count(c)) ++c;
    col[best] = c;
    for (int u : adj[best])
      if (col[u] == kUncolored) sat[u].insert(c);
  }
  return col;
}

EdgeColoring dsatur_line(const LinearHypergraph& H) {
  auto lg_raw = line_graph(H);
  std::vector<std::vector<int>> adj(lg_raw.size());
  for (size_t i = 0; i < lg_raw.size(); ++i)
    adj[i].assign(lg_raw[i].begin(), lg_raw[i].end());
  EdgeColoring ec;
  ec.color = dsatur_color_adj(adj);
  ec.palette_size = 0;
  for (Color c : ec.color) ec.palette_size = std::max(ec.palette_size, c + 1);
  return ec;
}

LargeEdgeResult color_large_medium(const LinearHypergraph& H,
                                   const Hierarchy& h, uint64_t seed) {
  (void)seed;  // the cascade is deterministic; seed kept for interface parity
  int m = H.edge_count(), n = H.n;
  // Edges must be medium/large, except that near-extremal lines of size
  // about sqrt(n) are admitted even when sqrt(n) <= r1 (small n).
  double fpp_lo = (1.0 - h.delta) * std::sqrt((double)n);
  for (EdgeId e = 0; e < m; ++e)
    if (H.edge_size(e) <= h.r1 && (double)H.edge_size(e) < fpp_lo)
      throw Error("PreconditionUnmet", "edge of size <= r1");

  LargeEdgeResult res;
  // Volume carried by edges of size (1 +- delta) sqrt(n).
  double rt = std::sqrt((double)n);
  double pairs_total = (double)n * (n - 1) / 2.0;
  bool all_extremal = true;
  for (EdgeId e = 0; e < m; ++e) {
    double s = H.edge_size(e);
    if (s >= (1.0 - h.delta) * rt && s <= (1.0 + h.delta) * rt)
      res.fpp_volume += s * (s - 1) / 2.0 / pairs_total;
    if (s < (1.0 - h.delta) * rt) all_extremal = false;
  }

  // Near-extremal route: pairing colorer gives <= n colors, classes <= 2.
  if (all_extremal && res.fpp_volume >= 1.0 - h.delta) {
    try {
      auto ec = extremal_color(H, h.delta);
      res.type = LargeEdgeResult::Type::B;
      res.col = ec;
      res.budget_ok = ec.palette_size <= n;
      std::vector<int> count(ec.palette_size, 0);
      res.cover_size.assign(ec.palette_size, 0);
      for (EdgeId e = 0; e < m; ++e) {
        ++count[ec.color[e]];
        res.cover_size[ec.color[e]] += H.edge_size(e);
      }
      res.side_conditions_ok =
          std::all_of(count.begin(), count.end(), [](int c) { return c <= 2; });
      if (verify_coloring(H, res.col))
        throw Error("InternalError", "extremal coloring not proper");
      return res;
    } catch (const Error& err) {
      if (err.kind() == "InternalError") throw;
      // Ladder exhausted at desk scale: fall through to the Type A cascade.
    }
  }

  // Type A cascade.
  res.type = LargeEdgeResult::Type::A;
  res.col.color.assign(m, kUncolored);
  auto lg = line_graph(H);

  std::vector<EdgeId> huge, medium, large;
  double huge_thr = h.beta * n / 4.0;
  for (EdgeId e = 0; e < m; ++e) {
    int s = H.edge_size(e);
    if (s >= huge_thr && s > h.r0)
      huge.push_back(e);
    else if (s <= h.r0)
      medium.push_back(e);
    else
      large.push_back(e);
  }

  Color next = 0;
  // Huge edges: one exclusive color each.
  for (EdgeId e : huge) {
    res.col.color[e] = next;
    res.huge_colors.push_back(next);
    ++next;
  }
  // Medium edges: reserved bounded palette.
  std::sort(medium.begin(), medium.end(), [&](EdgeId a, EdgeId b) {
    return H.edge_size(a) != H.edge_size(b) ? H.edge_size(a) > H.edge_size(b)
                                            : a < b;
  });
  Color med_base = next;
  next = capped_greedy(H, lg, medium, res.col, med_base, h.gamma1 * n);
  for (Color c = med_base; c < next; ++c) res.c_med.push_back(c);
  // Remaining large edges: cover-capped greedy with cap beta*n so every
  // non-huge non-medium class covers at most beta*n vertices.
  std::sort(large.begin(), large.end(), [&](EdgeId a, EdgeId b) {
    return H.edge_size(a) != H.edge_size(b) ? H.edge_size(a) > H.edge_size(b)
                                            : a < b;
  });
  next = capped_greedy(H, lg, large, res.col, next, h.beta * n);
  res.col.palette_size = next;

  if (verify_coloring(H, res.col))
    throw Error("InternalError", "large/medium coloring not proper");

  res.cover_size.assign(next, 0);
  std::vector<int> count(next, 0);
  for (EdgeId e = 0; e < m; ++e) {
    res.cover_size[res.col.color[e]] += H.edge_size(e);
    ++count[res.col.color[e]];
  }
  res.budget_ok = (double)next <= (1.0 - h.sigma) * n;
  // Side conditions: huge colors exclusive; medium edges inside C_med;
  // large-segment classes beta*n-bounded.
  res.side_conditions_ok = true;
  for (Color c : res.huge_colors)
    if (count[c] != 1) res.side_conditions_ok = false;
  for (EdgeId e : medium)
    if (res.col.color[e] < med_base ||
        res.col.color[e] >= med_base + (Color)res.c_med.size())
      res.side_conditions_ok = false;
  for (EdgeId e : large) {
    Color c = res.col.color[e];
    if (count[c] > 1 && (double)res.cover_size[c] > h.beta * n + h.r0)
      res.side_conditions_ok = false;
  }
  return res;
}

}  // namespace efl
