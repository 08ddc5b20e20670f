#include <random>
#include <set>

#include "doctest.h"
#include "efl/matching.hpp"

using namespace efl;

namespace {

SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
  SimpleGraph G;
  G.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((double)(rng() % 1000) / 1000.0 < p) G.edges.emplace_back(i, j);
  return G;
}

bool degrees_in_window(const SimpleGraph& G,
                       const std::vector<std::pair<int, int>>& F,
                       const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> d(G.n, 0);
  for (auto [a, b] : F) {
    ++d[a];
    ++d[b];
  }
  for (int v = 0; v < G.n; ++v)
    if (d[v] < g[v] || d[v] > f[v]) return false;
  return true;
}

}  // namespace

TEST_CASE("hall_bipartite finds perfect matchings and violators") {
  BipartiteGraph G;
  G.a_size = 3;
  G.b_size = 3;
  G.adj = {{0, 1}, {1, 2}, {0, 2}};
  auto r = hall_bipartite(G);
  CHECK(r.violator.empty());
  std::set<int> used(r.match_a.begin(), r.match_a.end());
  CHECK(used.size() == 3);

  // Two A-vertices sharing a single B-vertex: a violator must be reported.
  G.adj = {{0}, {0}, {1}};
  r = hall_bipartite(G);
  REQUIRE_FALSE(r.violator.empty());
  std::set<int> nb;
  for (int a : r.violator)
    for (int b : G.adj[a]) nb.insert(b);
  CHECK(nb.size() < r.violator.size());
}

TEST_CASE("dense_perfect_match on complete graphs") {
  for (int n : {4, 8, 14}) {
    SimpleGraph G;
    G.n = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) G.edges.emplace_back(i, j);
    auto M = dense_perfect_match(G, 20, 5);
    CHECK((int)M.size() == n / 2);
    std::set<int> cov;
    for (auto [a, b] : M) {
      cov.insert(a);
      cov.insert(b);
    }
    CHECK((int)cov.size() == n);
  }
}

TEST_CASE("dense_perfect_match fails on odd graphs") {
  SimpleGraph G;
  G.n = 3;
  G.edges = {{0, 1}, {1, 2}, {0, 2}};
  CHECK_THROWS_AS(dense_perfect_match(G, 5, 1), Error);
}

TEST_CASE("min_deg_bipartite_match covers A under the degree hypothesis") {
  // |A|=2, |B|=3, delta_A=2, delta_B>=1, delta_A+delta_B >= |A|.
  BipartiteGraph G;
  G.a_size = 2;
  G.b_size = 3;
  G.adj = {{0, 1}, {1, 2}};
  auto m = min_deg_bipartite_match(G);
  CHECK(m[0] != m[1]);
  CHECK(m[0] >= 0);
  CHECK(m[1] >= 0);
}

TEST_CASE("gf_factor agrees with the exhaustive oracle") {
  std::mt19937_64 rng(4242);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    int n = 4 + (int)(rng() % 9);  // up to 12 vertices
    auto G = random_graph(n, 0.2 + 0.6 * (double)(rng() % 100) / 100, rng);
    std::vector<int> deg(n, 0);
    for (auto [a, b] : G.edges) {
      ++deg[a];
      ++deg[b];
    }
    std::vector<int> g(n), f(n);
    for (int v = 0; v < n; ++v) {
      f[v] = deg[v] == 0 ? 0 : (int)(rng() % (deg[v] + 1));
      g[v] = std::max(0, f[v] - 1 - (int)(rng() % 2));
    }
    auto oracle = gf_factor_exhaustive(G, g, f);
    ++checked;
    if (oracle) {
      auto F = gf_factor(G, g, f);
      CHECK(degrees_in_window(G, F, g, f));
    } else {
      CHECK_THROWS_WITH_AS(gf_factor(G, g, f), doctest::Contains("Infeasible"),
                           Error);
    }
  }
  CHECK(checked == 300);
}

TEST_CASE("gf_factor validates inputs") {
  SimpleGraph G;
  G.n = 2;
  G.edges = {{0, 1}};
  CHECK_THROWS_AS(gf_factor(G, {2, 0}, {1, 1}), Error);   // g > f
  CHECK_THROWS_AS(gf_factor(G, {-1, 0}, {1, 1}), Error);  // negative g
  CHECK_THROWS_AS(gf_factor(G, {2, 2}, {2, 2}), Error);   // g above degree
}

TEST_CASE("crossing_match covers A when hypotheses hold") {
  // A of size 3, each with many distinct partners.
  BipartiteGraph G;
  G.a_size = 3;
  G.b_size = 30;
  G.adj.assign(3, {});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 30; ++b)
      if ((a + b) % 2 == 0) G.adj[a].push_back(b);
  bool fb = false;
  auto m = crossing_match(G, 0.3, 0.01, 100, &fb);
  std::set<int> used;
  for (int a = 0; a < 3; ++a) {
    CHECK(m[a] >= 0);
    used.insert(m[a]);
  }
  CHECK(used.size() == 3);
}
