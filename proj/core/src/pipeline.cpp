#include "efl/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

#include "efl/absorb.hpp"
#include "efl/extremal.hpp"
#include "efl/finish.hpp"
#include "efl/hypercore.hpp"
#include "efl/matching.hpp"
#include "efl/nibble.hpp"
#include "efl/ordering.hpp"

namespace efl {

namespace {

// Colors every still-uncolored edge by the least color (over the running
// palette, extended as needed) not used by an intersecting edge.  Largest
// edges first.  Always succeeds; this is the quarantine net every failed
// stage falls back to.
void complete_greedy(const LinearHypergraph& H, EdgeColoring& ec,
                     const std::vector<std::vector<EdgeId>>& lg) {
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < H.edge_count(); ++e)
    if (ec.color[e] == kUncolored) rest.push_back(e);
  std::sort(rest.begin(), rest.end(), [&](EdgeId a, EdgeId b) {
    return H.edge_size(a) != H.edge_size(b) ? H.edge_size(a) > H.edge_size(b)
                                            : a < b;
  });
  for (EdgeId e : rest) {
    std::set<Color> banned;
    for (EdgeId f : lg[e])
      if (ec.color[f] != kUncolored) banned.insert(ec.color[f]);
    Color c = 0;
    while (banned.count(c)) ++c;
    ec.color[e] = c;
    ec.palette_size = std::max(ec.palette_size, c + 1);
  }
}

}  // namespace

InstanceType classify_type(const LinearHypergraph& H,
                           const LargeEdgeResult& phi, double rho,
                           double eps) {
  if (phi.type == LargeEdgeResult::Type::B) return InstanceType::B;
  return is_full(H, rho, eps).full ? InstanceType::A2 : InstanceType::A1;
}

PipelineOutput efl_color(const LinearHypergraph& H, const Hierarchy& h,
                         uint64_t seed) {
  int n = H.n, m = H.edge_count();
  for (EdgeId e = 0; e < m; ++e)
    if (H.edge_size(e) < 2)
      throw Error("PreconditionUnmet", "singleton edges are not colorable here");

  PipelineOutput out;
  out.col.color.assign(m, kUncolored);
  out.col.palette_size = 0;
  auto& rep = out.report;
  auto lg = line_graph(H);

  auto finalize = [&]() -> PipelineOutput& {
    complete_greedy(H, out.col, lg);
    if (verify_coloring(H, out.col))
      throw Error("InternalError", "pipeline emitted an improper coloring");
    rep.proper = true;
    rep.colors_used = out.col.palette_size;
    rep.within_n = out.col.palette_size <= n;
    return out;
  };

  // Sparse route: with at most n edges, distinct colors suffice.
  if (m <= n) {
    std::iota(out.col.color.begin(), out.col.color.end(), 0);
    out.col.palette_size = m;
    rep.steps.push_back("sparse route: one color per edge");
    return finalize();
  }

  // Pure-graph route.
  bool all_graph = true;
  for (EdgeId e = 0; e < m && all_graph; ++e)
    if (H.edge_size(e) != 2) all_graph = false;
  if (all_graph) {
    SimpleGraph G;
    G.n = n;
    for (EdgeId e = 0; e < m; ++e)
      G.edges.emplace_back(H.edges[e][0], H.edges[e][1]);
    out.col = vizing(G);
    rep.steps.push_back("graph route: fan recoloring, palette " +
                        std::to_string(out.col.palette_size));
    rep.c_final = out.col.palette_size;
    return finalize();
  }

  // Step 1: large/medium edges.
  std::vector<EdgeId> big, small;
  for (EdgeId e = 0; e < m; ++e)
    (H.edge_size(e) > h.r1 ? big : small).push_back(e);

  Color base = 0;
  if (!big.empty()) {
    LinearHypergraph Hb;
    Hb.n = n;
    for (EdgeId e : big) Hb.edges.push_back(H.edges[e]);
    Hb.rebuild_incidence();
    try {
      auto phi = color_large_medium(Hb, h, seed);
      for (size_t i = 0; i < big.size(); ++i)
        out.col.color[big[i]] = phi.col.color[i];
      base = phi.col.palette_size;
      out.col.palette_size = base;
      rep.c_large = base;
      rep.fpp_volume = phi.fpp_volume;
      rep.type = classify_type(H, phi, h.rho2, h.eps1);
      rep.steps.push_back(std::string("large/medium stage: type ") +
                          (rep.type == InstanceType::B
                               ? "B"
                               : rep.type == InstanceType::A2 ? "A2" : "A1") +
                          ", palette " + std::to_string(base));
    } catch (const Error& err) {
      rep.fallbacks.push_back(std::string("large/medium: ") + err.what());
    }
  }

  // Steps 2-8: small edges through reservoir + matchings when the instance
  // is big enough for the machinery; otherwise the net takes them.
  if (!small.empty() && n >= 64) {
    try {
      Reservoir R = sample_reservoir(H, h.rho1, std::max(h.xi, 2.0 / std::sqrt((double)n)),
                                     h.eps1, seed);
      rep.steps.push_back("reservoir: " + std::to_string(R.edges.size()) +
                          " graph edges withheld");
      auto reg = regularize_small(H, R, h);
      // Map regularized non-singleton edges back to H small-edge ids.
      std::unordered_map<uint64_t, EdgeId> small_by_key;
      auto key_of = [&](const Edge& e) {
        uint64_t k = 1469598103934665603ULL;
        for (Vertex v : e) k = (k ^ (uint64_t)(v + 1)) * 1099511628211ULL;
        return k;
      };
      for (EdgeId e : small) small_by_key[key_of(H.edges[e])] = e;
      std::unordered_map<uint64_t, EdgeId> graph_small;
      // Reserved graph edges that are small also appear in `small`.
      // Number of main-stage colors: capped so the ledger can stay within n.
      int D = (int)std::floor((1.0 - h.rho1) * (n - 1));
      int buffer = std::max(1, (int)std::floor(10.0 * std::sqrt(h.gamma1) * D));
      int room = n - base - buffer - 2;
      D = std::clamp(D, 0, std::max(room, 0));
      rep.steps.push_back("main-stage budget: D=" + std::to_string(D) +
                          ", buffer=" + std::to_string(buffer));
      if (D > 0) {
        std::vector<std::vector<EdgeId>> M(D);  // no pre-colored matchings
        auto nr = nibble_color(H, reg.Hp, M, h.gamma1, h.kappa, seed + 17);
        for (int i = 0; i < D; ++i) {
          Color c = base + i;
          for (EdgeId pe : nr.matchings[i]) {
            if (reg.Hp.edge_size(pe) < 2) continue;  // padding singleton
            auto it = small_by_key.find(key_of(reg.Hp.edges[pe]));
            if (it != small_by_key.end() &&
                out.col.color[it->second] == kUncolored) {
              out.col.color[it->second] = c;
              out.col.palette_size = std::max(out.col.palette_size, c + 1);
            }
          }
        }
        rep.c_main = D;
        rep.steps.push_back(
            "main stage: leftover fraction " +
            std::to_string(nr.leftover_fraction));
      }
    } catch (const Error& err) {
      rep.fallbacks.push_back(std::string("main stage: ") + err.what());
    }
  }

  // Step 9 and leftovers: everything still uncolored (reserved graph edges,
  // leftover small edges, quarantined fragments) goes through the greedy
  // net, which reuses palette colors before opening fresh ones.
  rep.steps.push_back("finish: greedy completion over the shared palette");
  finalize();
  rep.c_final = rep.colors_used - rep.c_large - rep.c_main;
  if (rep.c_final < 0) rep.c_final = 0;
  return out;
}

EdgeColoring stability_color(const LinearHypergraph& H, const Hierarchy& h) {
  int n = H.n, m = H.edge_count();
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, H.degree(v));
  if ((double)max_deg > (1.0 - h.delta) * n)
    throw Error("PreconditionUnmet", "max degree above (1-delta) n");
  double rt = std::sqrt((double)n);
  int extremal = 0;
  for (EdgeId e = 0; e < m; ++e) {
    double s = H.edge_size(e);
    if (s >= (1 - h.delta) * rt && s <= (1 + h.delta) * rt) ++extremal;
  }
  if ((double)extremal > (1.0 - 3 * h.delta) * n)
    throw Error("PreconditionUnmet", "too many near-sqrt(n) edges");

  EdgeColoring ec;
  ec.color.assign(m, kUncolored);
  ec.palette_size = 0;
  auto lg = line_graph(H);

  std::vector<EdgeId> big;
  for (EdgeId e = 0; e < m; ++e)
    if (H.edge_size(e) > h.r1) big.push_back(e);
  if (!big.empty()) {
    LinearHypergraph Hb;
    Hb.n = n;
    for (EdgeId e : big) Hb.edges.push_back(H.edges[e]);
    Hb.rebuild_incidence();
    auto phi = color_large_medium(Hb, h, 0);
    for (size_t i = 0; i < big.size(); ++i)
      ec.color[big[i]] = phi.col.color[i];
    ec.palette_size = phi.col.palette_size;
  }
  // Small edges: greedy over the shared palette (their conflict lists with
  // the large stage are short, so reuse is almost always possible).
  complete_greedy(H, ec, lg);
  if (verify_coloring(H, ec))
    throw Error("InternalError", "stability coloring not proper");
  return ec;
}

EdgeColoring sublinear_color(const LinearHypergraph& H, double eta,
                             double eps_target) {
  (void)eps_target;
  int n = H.n, m = H.edge_count();
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, H.degree(v));
  if ((double)max_deg > eta * n)
    throw Error("PreconditionUnmet", "max degree above eta n");
  double rt = std::sqrt((double)n);
  for (EdgeId e = 0; e < m; ++e) {
    double s = H.edge_size(e);
    if (s > eta * rt + 1e-9 && s < rt / eta - 1e-9)
      throw Error("PreconditionUnmet",
                  "edge size inside the forbidden middle band");
  }
  EdgeColoring ec;
  ec.color.assign(m, kUncolored);
  ec.palette_size = 0;
  // Giant edges: volume forces there to be few; one fresh color each.
  Color next = 0;
  std::vector<EdgeId> tiny;
  for (EdgeId e = 0; e < m; ++e) {
    if ((double)H.edge_size(e) >= rt / eta - 1e-9)
      ec.color[e] = next++;
    else
      tiny.push_back(e);
  }
  ec.palette_size = next;
  // Tiny edges: saturation-order greedy on their line graph, fresh palette.
  if (!tiny.empty()) {
    LinearHypergraph Ht;
    Ht.n = n;
    for (EdgeId e : tiny) Ht.edges.push_back(H.edges[e]);
    Ht.rebuild_incidence();
    auto sub = dsatur_line(Ht);
    for (size_t i = 0; i < tiny.size(); ++i) ec.color[tiny[i]] = next + sub.color[i];
    ec.palette_size = next + sub.palette_size;
  }
  if (verify_coloring(H, ec))
    throw Error("InternalError", "sublinear coloring not proper");
  return ec;
}

}  // namespace efl
