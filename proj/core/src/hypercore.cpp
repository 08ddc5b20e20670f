#include "efl/hypercore.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace efl {

LinearHypergraph build(int n, std::vector<Edge> edges, bool multi_singletons) {
  if (n < 0) throw Error("BadVertexId", "negative vertex count");
  LinearHypergraph H;
  H.n = n;
  H.multi_singletons = multi_singletons;

  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) throw Error("BadVertexId", "empty edge");
    if (e.front() < 0 || e.back() >= n)
      throw Error("BadVertexId", "vertex id outside [0,n)");
  }

  // Duplicate detection (size >= 2 always; singletons unless multi mode).
  {
    std::set<Edge> seen;
    for (const auto& e : edges) {
      if (e.size() == 1 && multi_singletons) continue;
      if (!seen.insert(e).second)
        throw Error("DuplicateEdge", "repeated edge");
    }
  }

  // Linearity: every unordered vertex pair is covered by at most one edge.
  std::unordered_map<int64_t, EdgeId> pair_owner;
  pair_owner.reserve(edges.size() * 4);
  for (EdgeId ei = 0; ei < static_cast<EdgeId>(edges.size()); ++ei) {
    const auto& e = edges[ei];
    for (size_t a = 0; a < e.size(); ++a)
      for (size_t b = a + 1; b < e.size(); ++b) {
        int64_t key = static_cast<int64_t>(e[a]) * n + e[b];
        auto [it, fresh] = pair_owner.emplace(key, ei);
        if (!fresh)
          throw Error("LinearityViolation",
                      "edges " + std::to_string(it->second) + " and " +
                          std::to_string(ei) + " share two vertices");
      }
  }

  H.edges = std::move(edges);
  H.rebuild_incidence();
  return H;
}

DerivedViews derived_views(const LinearHypergraph& H, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error("BadParam", "eps must be in (0,1)");
  DerivedViews dv;
  dv.graph_degree.assign(H.n, 0);
  for (EdgeId e = 0; e < H.edge_count(); ++e)
    if (H.edge_size(e) == 2) {
      dv.graph_edges.push_back(e);
      ++dv.graph_degree[H.edges[e][0]];
      ++dv.graph_degree[H.edges[e][1]];
    }
  dv.in_U.assign(H.n, 0);
  double thr = (1.0 - eps) * H.n;
  for (Vertex v = 0; v < H.n; ++v)
    if (dv.graph_degree[v] >= thr) {
      dv.U.push_back(v);
      dv.in_U[v] = 1;
    }
  for (EdgeId e : dv.graph_edges)
    if (dv.in_U[H.edges[e][0]] || dv.in_U[H.edges[e][1]])
      dv.crossing_edges.push_back(e);
  return dv;
}

std::vector<std::vector<EdgeId>> line_graph(const LinearHypergraph& H) {
  std::vector<std::vector<EdgeId>> adj(H.edge_count());
  // Two distinct edges of a linear hypergraph share at most one vertex, so
  // enumerating per-vertex incidence pairs lists each adjacency exactly once.
  for (Vertex v = 0; v < H.n; ++v) {
    const auto& inc = H.incidence[v];
    for (size_t a = 0; a < inc.size(); ++a)
      for (size_t b = a + 1; b < inc.size(); ++b) {
        adj[inc[a]].push_back(inc[b]);
        adj[inc[b]].push_back(inc[a]);
      }
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

double volume(const LinearHypergraph& H, const std::vector<EdgeId>& W) {
  if (H.n < 2) return 0.0;
  double denom = 0.5 * H.n * (H.n - 1);
  double s = 0.0;
  for (EdgeId e : W) {
    double k = H.edge_size(e);
    s += 0.5 * k * (k - 1);
  }
  return s / denom;
}

double volume_all(const LinearHypergraph& H) {
  std::vector<EdgeId> all(H.edge_count());
  for (EdgeId e = 0; e < H.edge_count(); ++e) all[e] = e;
  return volume(H, all);
}

EdgeClass classify(const LinearHypergraph& H, const Hierarchy& hier) {
  hier.validate();
  EdgeClass ec;
  int m = H.edge_count();
  ec.size_class.resize(m);
  ec.fpp_extremal.assign(m, 0);
  ec.huge.assign(m, 0);
  double sq = std::sqrt(static_cast<double>(H.n));
  double lo = (1.0 - hier.delta) * sq, hi = (1.0 + hier.delta) * sq;
  double huge_thr = hier.beta * H.n / 4.0;
  int huge_count = 0;
  for (EdgeId e = 0; e < m; ++e) {
    int k = H.edge_size(e);
    ec.size_class[e] = k <= hier.r1 ? SizeClass::Small
                       : k <= hier.r0 ? SizeClass::Medium
                                      : SizeClass::Large;
    if (k >= lo && k <= hi) ec.fpp_extremal[e] = 1;
    if (k >= huge_thr) {
      ec.huge[e] = 1;
      ++huge_count;
    }
  }
  // Count bound: at alpha = beta/4, |{e : |e| >= alpha n}| <= 2/alpha = 8/beta.
  // (Holds for alpha >= 1/n because pair budgets are disjoint.)
  if (huge_thr >= 1.0 && huge_count > 8.0 / hier.beta + 1e-9)
    throw Error("HugeCountBoundViolated",
                "count of edges above beta*n/4 exceeds 8/beta");
  return ec;
}

std::optional<std::pair<EdgeId, EdgeId>> verify_coloring(const LinearHypergraph& H,
                                                         const EdgeColoring& col) {
  if (static_cast<int>(col.color.size()) != H.edge_count())
    throw Error("Uncolored", "coloring length mismatch");
  for (EdgeId e = 0; e < H.edge_count(); ++e) {
    if (col.color[e] == kUncolored)
      throw Error("Uncolored", "edge " + std::to_string(e) + " has no color");
    if (col.color[e] < 0 || col.color[e] >= col.palette_size)
      throw Error("BadColor", "color outside palette at edge " + std::to_string(e));
  }
  // Intersecting edges share a vertex; scan per-vertex incidence lists.
  std::optional<std::pair<EdgeId, EdgeId>> bad;
  for (Vertex v = 0; v < H.n && !bad; ++v) {
    const auto& inc = H.incidence[v];
    std::unordered_map<Color, EdgeId> first;
    for (EdgeId e : inc) {
      auto [it, fresh] = first.emplace(col.color[e], e);
      if (!fresh) {
        bad = std::make_pair(std::min(it->second, e), std::max(it->second, e));
        break;
      }
    }
  }
  return bad;
}

CoverageReport coverage(const LinearHypergraph& H,
                        const std::vector<std::vector<EdgeId>>& matchings,
                        const std::vector<Vertex>& U, const std::vector<Vertex>& S) {
  CoverageReport rep;
  std::vector<char> in_S(H.n, 0);
  for (Vertex v : S) in_S[v] = 1;
  std::vector<int> miss(H.n, 0);
  bool perfect = true, nearly = true;

  std::vector<char> covered(H.n, 0);
  for (size_t i = 0; i < matchings.size(); ++i) {
    std::fill(covered.begin(), covered.end(), 0);
    for (EdgeId e : matchings[i])
      for (Vertex v : H.edges[e]) {
        if (covered[v])
          throw Error("NotAMatching", "matching " + std::to_string(i) +
                                          " has intersecting edges");
        covered[v] = 1;
      }
    int misses_here = 0;
    for (Vertex u : U)
      if (!covered[u]) {
        ++misses_here;
        ++miss[u];
        perfect = false;
        if (!in_S[u]) nearly = false;
        rep.defects.emplace_back(static_cast<int>(i), u);
      }
    if (misses_here > 1) nearly = false;
  }
  for (Vertex u : U)
    if (miss[u] > 0) {
      rep.miss_counts.emplace_back(u, miss[u]);
      if (miss[u] > 1) nearly = false;
    }
  rep.status = perfect ? CoverageStatus::Perfect
               : nearly ? CoverageStatus::NearlyPerfect
                        : CoverageStatus::Neither;
  if (rep.status != CoverageStatus::NearlyPerfect) rep.defects.clear();
  return rep;
}

FullnessReport is_full(const LinearHypergraph& H, double rho, double eps) {
  if (!(eps > 0 && eps < 1 && rho > 0 && rho < 1))
    throw Error("BadParam", "rho,eps must be in (0,1)");
  FullnessReport r;
  auto dv = derived_views(H, eps);
  r.near_full_count = static_cast<int>(dv.U.size());
  for (Vertex v = 0; v < H.n; ++v)
    if (dv.graph_degree[v] == H.n - 1) ++r.exact_full_count;
  r.full = r.near_full_count >= (1.0 - 10 * eps) * H.n &&
           r.exact_full_count >= (rho - 15 * eps) * H.n;
  return r;
}

// --- I/O ---------------------------------------------------------------------

std::string to_lhg(const LinearHypergraph& H) {
  std::ostringstream os;
  os << "n " << H.n << "\n";
  if (H.multi_singletons) os << "multi\n";
  for (const auto& e : H.edges) {
    os << "e";
    for (Vertex v : e) os << ' ' << v;
    os << "\n";
  }
  return os.str();
}

LinearHypergraph from_lhg(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  bool multi = false;
  std::vector<Edge> edges;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "n") {
      if (!(ls >> n)) throw Error("ParseError", "bad n line");
    } else if (tag == "multi") {
      multi = true;
    } else if (tag == "e") {
      Edge e;
      int v;
      while (ls >> v) e.push_back(v);
      edges.push_back(std::move(e));
    } else {
      throw Error("ParseError", "unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) throw Error("ParseError", "missing n line");
  return build(n, std::move(edges), multi);
}

}  // namespace efl
