#include "doctest.h"
#include "efl/generators.hpp"
#include "efl/greedy.hpp"
#include "efl/hypercore.hpp"

using namespace efl;

TEST_CASE("list_greedy respects lists and properness") {
  SUBCASE("disjoint edges share one color") {
    auto H = build(6, {{0, 1}, {2, 3}, {4, 5}});
    ListAssignment la;
    la.palette_size = 1;
    la.allowed = {{0}, {0}, {0}};
    auto ec = list_greedy(H, EdgeOrdering::identity(3), la, 0.0, 1.0);
    CHECK(ec.color == std::vector<Color>{0, 0, 0});
  }
  SUBCASE("Fano with a full palette uses 7 colors") {
    auto H = projective_plane(2);
    auto ec = list_greedy(H, size_order(H), ListAssignment::full(7, 7), 0.0, 1.0);
    CHECK_FALSE(verify_coloring(H, ec).has_value());
    CHECK(ec.colors_used() == 7);
  }
  SUBCASE("triangle with tight lists") {
    auto H = build(3, {{0, 1}, {1, 2}, {0, 2}});
    ListAssignment la;
    la.palette_size = 3;
    la.allowed = {{0, 1}, {1, 2}, {0, 2}};
    auto ec = list_greedy(H, EdgeOrdering::identity(3), la, 0.0, 1.0);
    CHECK_FALSE(verify_coloring(H, ec).has_value());
    for (EdgeId e = 0; e < 3; ++e) {
      bool in_list = false;
      for (Color c : la.allowed[e]) in_list |= (c == ec.color[e]);
      CHECK(in_list);
    }
  }
  SUBCASE("exhausted list throws") {
    auto H = build(3, {{0, 1}, {1, 2}});
    ListAssignment la;
    la.palette_size = 1;
    la.allowed = {{0}, {0}};
    CHECK_THROWS_WITH_AS(list_greedy(H, EdgeOrdering::identity(2), la, 0.0, 1.0),
                         doctest::Contains("ListExhausted"), Error);
  }
}

TEST_CASE("split_bounded caps class covers and refines") {
  // One color class covering all vertices.
  auto H = build(12, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}});
  EdgeColoring col;
  col.color = {0, 0, 0, 0};
  col.palette_size = 1;
  auto out = split_bounded(H, col, 0.5, 2);
  CHECK_FALSE(verify_coloring(H, out).has_value());
  std::vector<int> cover(out.palette_size, 0);
  std::vector<int> size(out.palette_size, 0);
  for (EdgeId e = 0; e < 4; ++e) {
    cover[out.color[e]] += H.edge_size(e);
    ++size[out.color[e]];
  }
  for (int c = 0; c < out.palette_size; ++c)
    if (size[c] > 1) CHECK(cover[c] <= 0.5 * H.n);
  // Already-bounded input is unchanged in class count.
  auto again = split_bounded(H, out, 0.5, 2);
  CHECK(again.palette_size == out.palette_size);
}

TEST_CASE("color_medium is gamma-bounded and validates sizes") {
  SizeLaw law;
  law.weights = {{20, 1.0}};
  auto H = random_linear(2000, law, 150, 5);
  REQUIRE(H.edge_count() > 0);
  auto ec = color_medium(H, 0.2, 256, 16);
  CHECK_FALSE(verify_coloring(H, ec).has_value());
  CHECK((double)ec.palette_size <= 0.2 * H.n);
  auto bad = build(10, {{0, 1}});
  CHECK_THROWS_AS(color_medium(bad, 0.2, 256, 16), Error);
}

TEST_CASE("dsatur_line matches line-graph structure") {
  auto F = projective_plane(2);
  CHECK(dsatur_line(F).colors_used() == 7);
  auto D = build(6, {{0, 1}, {2, 3}, {4, 5}});
  CHECK(dsatur_line(D).colors_used() == 1);
}

TEST_CASE("color_large_medium routes types and stays proper") {
  Hierarchy h;
  SUBCASE("near-extremal instance goes Type B") {
    auto H = projective_plane(5);  // n=31, lines of size 6 within (1±delta)√31
    auto res = color_large_medium(H, h, 1);
    CHECK(res.type == LargeEdgeResult::Type::B);
    CHECK_FALSE(verify_coloring(H, res.col).has_value());
    CHECK(res.col.colors_used() <= H.n);
    CHECK(res.side_conditions_ok);
  }
  SUBCASE("medium-size instance goes Type A") {
    SizeLaw law;
    law.weights = {{20, 1.0}, {30, 1.0}};
    auto H = random_linear(1500, law, 200, 3);
    REQUIRE(H.edge_count() > 0);
    auto res = color_large_medium(H, h, 1);
    CHECK(res.type == LargeEdgeResult::Type::A);
    CHECK_FALSE(verify_coloring(H, res.col).has_value());
  }
  SUBCASE("small edges are rejected") {
    auto H = build(10, {{0, 1}});
    CHECK_THROWS_AS(color_large_medium(H, h, 1), Error);
  }
}
