#include <set>

#include "doctest.h"
#include "efl/generators.hpp"
#include "efl/hypercore.hpp"

using namespace efl;

TEST_CASE("projective planes have the right shape") {
  for (int q : {2, 3, 5}) {
    auto H = projective_plane(q);
    int n = q * q + q + 1;
    CHECK(H.n == n);
    CHECK(H.edge_count() == n);
    for (EdgeId e = 0; e < n; ++e) CHECK(H.edge_size(e) == q + 1);
    for (Vertex v = 0; v < n; ++v) CHECK(H.degree(v) == q + 1);
    // Every point pair on exactly one line <=> volume 1 + linearity.
    CHECK(volume_all(H) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(projective_plane(6), Error);  // not a prime
}

TEST_CASE("degenerate plane shape") {
  auto H = degenerate_plane(9);
  CHECK(H.n == 9);
  CHECK(H.edge_count() == 9);
  int big = 0;
  for (EdgeId e = 0; e < 9; ++e)
    if (H.edge_size(e) == 8) ++big;
  CHECK(big == 1);
}

TEST_CASE("complete graph") {
  auto H = complete_graph(6);
  CHECK(H.edge_count() == 15);
  for (Vertex v = 0; v < 6; ++v) CHECK(H.degree(v) == 5);
}

TEST_CASE("random_linear is linear, deterministic, and respects the law") {
  SizeLaw law;
  law.weights = {{2, 1.0}, {3, 1.0}};
  auto H1 = random_linear(50, law, 100, 7);
  auto H2 = random_linear(50, law, 100, 7);
  CHECK(H1.edges == H2.edges);
  auto H3 = random_linear(50, law, 100, 8);
  CHECK(H1.edges != H3.edges);
  for (EdgeId e = 0; e < H1.edge_count(); ++e) {
    CHECK(H1.edge_size(e) >= 2);
    CHECK(H1.edge_size(e) <= 3);
  }
  CHECK_NOTHROW(build(50, H1.edges));  // re-validate linearity
}

TEST_CASE("uniform_near_regular hits the degree window") {
  DegreeSpread sp;
  auto H = uniform_near_regular(300, 3, 30, 0.1, 3, &sp);
  for (EdgeId e = 0; e < H.edge_count(); ++e) CHECK(H.edge_size(e) == 3);
  CHECK(sp.min_deg >= 27);
  CHECK(sp.max_deg <= 33);
  CHECK_NOTHROW(build(300, H.edges));
}

TEST_CASE("uniform_near_regular rejects impossible parameters") {
  // r*D beyond (1+kappa)(n-1) cannot be linear.
  CHECK_THROWS_AS(uniform_near_regular(20, 5, 30, 0.05, 1), Error);
}

TEST_CASE("embed_uniform preserves the instance and traps degrees") {
  auto H = build(8, {{0, 1, 2}, {3, 4}, {0, 5}});
  int r = 3, D = 6, C = 3;
  auto res = embed_uniform(H, r, D, C);
  const auto& E = res.H_unif;
  for (EdgeId e = 0; e < E.edge_count(); ++e) CHECK(E.edge_size(e) == r);
  // (E1): the first edges restrict to the originals.
  for (EdgeId e = 0; e < H.edge_count(); ++e) {
    std::set<Vertex> orig(H.edges[e].begin(), H.edges[e].end());
    std::set<Vertex> inside;
    for (Vertex v : E.edges[e])
      if (v < H.n) inside.insert(v);
    CHECK(orig == inside);
  }
  // (E2): all degrees within [D-C, D].
  for (Vertex v = 0; v < E.n; ++v) {
    CHECK(E.degree(v) <= D);
    CHECK(E.degree(v) >= D - C);
  }
  // (E3): vertex budget.
  CHECK((int64_t)E.n <= (int64_t)r * (r - 1) * (r - 1) * D * D * D * H.n);
}
