#include "doctest.h"
#include "efl/generators.hpp"
#include "efl/greedy.hpp"
#include "efl/hypercore.hpp"
#include "efl/pipeline.hpp"

using namespace efl;

TEST_CASE("classify_type routing") {
  Hierarchy h;
  LargeEdgeResult phi;
  phi.type = LargeEdgeResult::Type::B;
  auto F = projective_plane(2);
  CHECK(classify_type(F, phi, h.rho2, h.eps1) == InstanceType::B);
  phi.type = LargeEdgeResult::Type::A;
  CHECK(classify_type(F, phi, h.rho2, h.eps1) == InstanceType::A1);  // not full
  auto K = complete_graph(100);
  CHECK(classify_type(K, phi, h.rho2, h.eps1) == InstanceType::A2);
}

TEST_CASE("efl_color is proper and within n on structured families") {
  Hierarchy h;
  SUBCASE("projective planes") {
    for (int q : {2, 3}) {
      auto H = projective_plane(q);
      auto out = efl_color(H, h, 1);
      CHECK(out.report.proper);
      CHECK(out.report.within_n);
      CHECK(out.col.colors_used() <= H.n);
    }
  }
  SUBCASE("graphs route through the fan colorer") {
    for (int n : {5, 7, 12}) {
      auto H = complete_graph(n);
      auto out = efl_color(H, h, 1);
      CHECK(out.report.proper);
      CHECK(out.report.within_n);
    }
  }
  SUBCASE("degenerate planes") {
    for (int n : {6, 9, 50}) {
      auto H = degenerate_plane(n);
      auto out = efl_color(H, h, 1);
      CHECK(out.report.proper);
      CHECK(out.col.colors_used() <= H.n);
    }
  }
  SUBCASE("mixed random instance is always proper") {
    SizeLaw law;
    law.weights = {{2, 3.0}, {3, 2.0}, {5, 1.0}, {17, 0.3}};
    for (uint64_t s = 1; s <= 5; ++s) {
      auto H = random_linear(400, law, 1200, s);
      auto out = efl_color(H, h, s);
      CHECK(out.report.proper);
      CHECK_FALSE(verify_coloring(H, out.col).has_value());
    }
  }
}

TEST_CASE("efl_color is deterministic per seed") {
  Hierarchy h;
  SizeLaw law;
  law.weights = {{2, 2.0}, {3, 1.0}};
  auto H = random_linear(200, law, 600, 4);
  auto a = efl_color(H, h, 11);
  auto b = efl_color(H, h, 11);
  CHECK(a.col.color == b.col.color);
}

TEST_CASE("efl_color rejects singletons") {
  Hierarchy h;
  auto H = build(4, {{0}, {1, 2}});
  CHECK_THROWS_AS(efl_color(H, h, 1), Error);
}

TEST_CASE("stability_color under its preconditions") {
  Hierarchy h;
  SizeLaw law;
  law.weights = {{2, 2.0}, {3, 2.0}, {20, 1.0}};
  auto H = random_linear(500, law, 800, 2);
  auto ec = stability_color(H, h);
  CHECK_FALSE(verify_coloring(H, ec).has_value());
  CHECK((double)ec.colors_used() <= (1 - h.sigma) * H.n);
  // Projective planes violate the extremal-count precondition.
  CHECK_THROWS_AS(stability_color(projective_plane(3), h), Error);
}

TEST_CASE("sublinear_color budget on giant-edge instances") {
  // Edges all of size >= sqrt(n)/eta: each gets its own color.
  int n = 400;
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    Edge e;
    for (int v = 0; v < n; ++v)
      if (v % 3 == i) e.push_back(v);
    edges.push_back(e);
  }
  auto H = build(n, edges);
  auto ec = sublinear_color(H, 0.4, 0.5);
  CHECK(ec.colors_used() == 3);
  // Tiny-edge instance.
  SizeLaw law;
  law.weights = {{2, 1.0}};
  auto T = random_linear(900, law, 900, 3);
  auto ec2 = sublinear_color(T, 0.1, 0.5);
  CHECK_FALSE(verify_coloring(T, ec2).has_value());
  CHECK((double)ec2.colors_used() <= 0.5 * T.n);
  // Mid-band edges are rejected.
  SizeLaw mid;
  mid.weights = {{10, 1.0}};
  auto M = random_linear(900, mid, 50, 4);
  CHECK_THROWS_AS(sublinear_color(M, 0.05, 0.5), Error);
}
