#include <numeric>
#include <set>

#include "doctest.h"
#include "efl/generators.hpp"
#include "efl/hypercore.hpp"
#include "efl/nibble.hpp"

using namespace efl;

TEST_CASE("pseudorandom_matching basics") {
  SUBCASE("gamma = 1 empties the matching") {
    auto H = uniform_near_regular(120, 3, 10, 0.2, 1);
    std::vector<Vertex> V(H.n);
    std::iota(V.begin(), V.end(), 0);
    auto res = pseudorandom_matching(H, 1.0, 0.05, {V}, 1, 1);
    CHECK(res.matching.empty());
    REQUIRE_FALSE(res.stats.empty());
    CHECK(res.stats[0].uncovered == H.n);
  }
  SUBCASE("output is a matching and deterministic per seed") {
    auto H = uniform_near_regular(300, 3, 24, 0.1, 2);
    std::vector<Vertex> V(H.n);
    std::iota(V.begin(), V.end(), 0);
    auto a = pseudorandom_matching(H, 0.2, 0.05, {V}, 5, 1);
    auto b = pseudorandom_matching(H, 0.2, 0.05, {V}, 5, 1);
    CHECK(a.matching == b.matching);
    std::vector<char> cov(H.n, 0);
    for (EdgeId e : a.matching)
      for (Vertex v : H.edges[e]) {
        CHECK_FALSE(cov[v]);
        cov[v] = 1;
      }
  }
  SUBCASE("window statistic at the calibration point") {
    auto H = uniform_near_regular(2000, 3, 60, 0.05, 3);
    std::vector<Vertex> V(H.n);
    std::iota(V.begin(), V.end(), 0);
    auto res = pseudorandom_matching(H, 0.2, 0.05, {V}, 7, 3);
    CHECK(res.all_in_window);
  }
}

TEST_CASE("nibble_color containment and disjointness") {
  auto H = complete_graph(60);
  Hierarchy h;
  LinearHypergraph Hp = H;  // use the graph itself as the small-edge part
  int D = 10;
  std::vector<std::vector<EdgeId>> M(D);
  M[0] = {0};  // one pre-colored edge
  auto res = nibble_color(H, Hp, M, 0.1, 0.05, 4);
  REQUIRE((int)res.matchings.size() == D);
  CHECK(res.containment_ok);
  // Pairwise edge-disjoint additions.
  std::set<EdgeId> seen;
  for (const auto& Ni : res.matchings)
    for (EdgeId e : Ni) {
      CHECK_FALSE(seen.count(e));
      seen.insert(e);
    }
  CHECK(res.leftover_fraction >= 0.0);
  CHECK(res.leftover_fraction <= 1.0);
}

TEST_CASE("main_color trivial and structured runs") {
  SUBCASE("no matchings, empty output") {
    auto H = complete_graph(64);
    Hierarchy h;
    Reservoir R;
    R.rho = h.rho1;
    CHECK(main_color(H, h, R, {}, {}, 1).empty());
  }
  SUBCASE("small batch over K_n") {
    int n = 150;
    auto H = complete_graph(n);
    Hierarchy h;
    auto R = sample_reservoir(H, h.rho1, h.xi, h.eps1, 2);
    std::vector<Vertex> S(n);
    std::iota(S.begin(), S.end(), 0);
    std::vector<std::vector<EdgeId>> M(4);
    auto out = main_color(H, h, R, S, M, 5);
    CHECK((int)out.size() == 4);
  }
}

TEST_CASE("leftover_color assigns every leftover edge and keeps containment") {
  int n = 150;
  auto H = complete_graph(n);
  AbsorbParams p;
  p.rho = 0.1;
  p.gamma = 0.4;
  p.eps = 0.04;
  auto R = sample_reservoir(H, p.rho, 0.05, p.eps, 3);
  std::set<EdgeId> res_set(R.edges.begin(), R.edges.end());
  // A few pairwise-disjoint leftover edges outside the reservoir.
  std::vector<EdgeId> H_rem;
  std::vector<char> touched(n, 0);
  for (EdgeId e = 0; e < H.edge_count() && (int)H_rem.size() < 10; ++e) {
    if (res_set.count(e)) continue;
    Vertex a = H.edges[e][0], b = H.edges[e][1];
    if (touched[a] || touched[b]) continue;
    touched[a] = touched[b] = 1;
    H_rem.push_back(e);
  }
  std::vector<int> C = {0, 1, 2, 3};
  std::vector<std::vector<EdgeId>> Mc(4);
  std::vector<Vertex> S(n);
  std::iota(S.begin(), S.end(), 0);
  auto out = leftover_color(H, C, Mc, R, H_rem, S, p, 9);
  REQUIRE(out.size() == 4);
  // Every leftover edge appears in exactly one class.
  std::set<EdgeId> assigned;
  for (const auto& Nc : out)
    for (EdgeId e : Nc) assigned.insert(e);
  for (EdgeId e : H_rem) CHECK(assigned.count(e));
}
