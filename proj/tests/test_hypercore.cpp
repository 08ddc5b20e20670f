#include "doctest.h"
#include "efl/generators.hpp"
#include "efl/hypercore.hpp"

using namespace efl;

TEST_CASE("build validates input") {
  CHECK_NOTHROW(build(4, {{0, 1}, {1, 2, 3}}));
  CHECK_THROWS_WITH_AS(build(3, {{0, 5}}), doctest::Contains("BadVertexId"), Error);
  CHECK_THROWS_WITH_AS(build(4, {{0, 1}, {1, 0}}), doctest::Contains("DuplicateEdge"),
                       Error);
  // Two edges sharing two vertices violate linearity.
  CHECK_THROWS_WITH_AS(build(5, {{0, 1, 2}, {0, 1, 3}}),
                       doctest::Contains("LinearityViolation"), Error);
  // Multi-singleton mode allows repeated singletons and nothing else twice.
  CHECK_NOTHROW(build(3, {{0}, {0}, {1, 2}}, true));
  CHECK_THROWS_AS(build(3, {{0}, {0}}, false), Error);
}

TEST_CASE("lhg round trip") {
  auto H = projective_plane(2);
  auto text = to_lhg(H);
  auto H2 = from_lhg(text);
  CHECK(H2.n == H.n);
  CHECK(H2.edges == H.edges);
  // Multi-singleton flag survives.
  auto M = build(3, {{0}, {0}, {1, 2}}, true);
  CHECK(from_lhg(to_lhg(M)).multi_singletons);
}

TEST_CASE("coloring json round trip") {
  EdgeColoring ec;
  ec.color = {0, 2, 1, 2};
  ec.palette_size = 3;
  auto ec2 = coloring_from_json(coloring_to_json(ec));
  CHECK(ec2.color == ec.color);
  CHECK(ec2.palette_size == 3);
}

TEST_CASE("line graph of the Fano plane is K7") {
  auto H = projective_plane(2);
  auto lg = line_graph(H);
  REQUIRE(lg.size() == 7);
  for (auto& nb : lg) CHECK(nb.size() == 6);
}

TEST_CASE("volume of a projective plane is 1") {
  for (int q : {2, 3}) {
    auto H = projective_plane(q);
    CHECK(volume_all(H) == doctest::Approx(1.0));
  }
}

TEST_CASE("verify_coloring finds the offending pair") {
  auto H = build(4, {{0, 1}, {1, 2}, {2, 3}});
  EdgeColoring ec;
  ec.palette_size = 2;
  ec.color = {0, 1, 0};
  CHECK_FALSE(verify_coloring(H, ec).has_value());
  ec.color = {0, 0, 1};
  auto bad = verify_coloring(H, ec);
  REQUIRE(bad.has_value());
  CHECK(bad->first == 0);
  CHECK(bad->second == 1);
  ec.color = {0, kUncolored, 1};
  CHECK_THROWS_WITH_AS(verify_coloring(H, ec), doctest::Contains("Uncolored"), Error);
  ec.color = {0, 5, 1};
  CHECK_THROWS_WITH_AS(verify_coloring(H, ec), doctest::Contains("BadColor"), Error);
}

TEST_CASE("coverage statuses") {
  auto H = build(6, {{0, 1}, {2, 3}, {4, 5}, {0, 2}});
  std::vector<Vertex> U = {0, 1, 2};
  SUBCASE("perfect") {
    auto rep = coverage(H, {{0, 1}}, U, {});
    CHECK(rep.status == CoverageStatus::Perfect);
  }
  SUBCASE("nearly perfect with defect in S") {
    auto rep = coverage(H, {{0, 1}, {0}}, U, {2});
    CHECK(rep.status == CoverageStatus::NearlyPerfect);
  }
  SUBCASE("defect outside S fails") {
    auto rep = coverage(H, {{0}}, U, {});
    CHECK(rep.status == CoverageStatus::Neither);
  }
  SUBCASE("non-matching throws") {
    CHECK_THROWS_WITH_AS(coverage(H, {{0, 3}}, U, {}),
                         doctest::Contains("NotAMatching"), Error);
  }
}

TEST_CASE("fullness on complete vs sparse instances") {
  auto K = complete_graph(60);
  CHECK(is_full(K, 0.3, 0.02).full);
  auto F = projective_plane(2);  // no graph edges at all
  CHECK_FALSE(is_full(F, 0.3, 0.02).full);
}

TEST_CASE("derived views split graph part and high-degree set") {
  auto K = complete_graph(20);
  auto dv = derived_views(K, 0.1);
  CHECK((int)dv.graph_edges.size() == 190);
  CHECK((int)dv.U.size() == 20);  // each degree 19 >= 0.9*20
  CHECK(dv.crossing_edges.size() == dv.graph_edges.size());
}

TEST_CASE("classify flags huge edges and enforces the count bound") {
  Hierarchy h;
  auto D = degenerate_plane(500);  // big edge size 499 >= beta n/4 = 1
  auto cls = classify(D, h);
  CHECK(cls.huge[D.edge_count() - 1]);
}
