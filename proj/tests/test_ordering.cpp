#include <random>

#include "doctest.h"
#include "efl/generators.hpp"
#include "efl/hypercore.hpp"
#include "efl/ordering.hpp"

using namespace efl;

TEST_CASE("size_order is non-increasing with index ties") {
  auto H = build(10, {{0, 1}, {2, 3, 4}, {5, 6}, {0, 2, 5, 7}});
  auto ord = size_order(H);
  CHECK(ord.perm == std::vector<EdgeId>{3, 1, 0, 2});
  for (EdgeId e = 0; e < 4; ++e) CHECK(ord.perm[ord.pos[e]] == e);
}

TEST_CASE("fwddeg counts intersecting predecessors") {
  auto H = build(6, {{0, 1}, {1, 2}, {3, 4}, {0, 2}});
  auto ord = EdgeOrdering::identity(4);
  CHECK(fwddeg(H, ord, 0) == 0);
  CHECK(fwddeg(H, ord, 1) == 1);
  CHECK(fwddeg(H, ord, 2) == 0);
  CHECK(fwddeg(H, ord, 3) == 2);
}

TEST_CASE("audit inequality (i) holds on structured instances") {
  for (int q : {2, 3}) {
    auto H = projective_plane(q);
    auto ord = size_order(H);
    for (const auto& row : audit_fwd_inequalities(H, ord, 0.2, 0.1, 0.5))
      CHECK(row.ineq1_ok);
  }
}

TEST_CASE("reorder on a disjoint instance is Good") {
  auto H = build(12, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}});
  auto oc = reorder(H, 0.5, 1.0);
  CHECK(oc.kind == ReorderOutcome::Kind::Good);
  CHECK(oc.certified);
  for (EdgeId e = 0; e < 4; ++e)
    CHECK(fwddeg(H, oc.ord, e) <= (1 - 0.5) * H.n);
}

TEST_CASE("reorder postconditions under fuzz") {
  std::mt19937_64 rng(99);
  SizeLaw law;
  law.weights = {{2, 2.0}, {3, 2.0}, {4, 1.0}};
  for (int t = 0; t < 50; ++t) {
    int n = 12 + (int)(rng() % 30);
    auto H = random_linear(n, law, 3 * n, rng());
    if (H.edge_count() == 0) continue;
    double tau = 0.2 + 0.5 * (double)(rng() % 100) / 100.0;
    auto oc = reorder(H, tau, 1.0);
    REQUIRE(oc.certified);
    if (oc.kind == ReorderOutcome::Kind::Good) {
      for (EdgeId e = 0; e < H.edge_count(); ++e)
        CHECK((double)fwddeg(H, oc.ord, e) <= (1 - tau) * n + 1e-9);
    } else {
      // (O1): everything after the pivot has small forward degree.
      int p = oc.ord.pos[oc.e_star];
      for (int i = p + 1; i < H.edge_count(); ++i)
        CHECK((double)fwddeg(H, oc.ord, oc.ord.perm[i]) <= (1 - tau) * n + 1e-9);
      // (O2): sizes non-increasing up to the pivot.
      for (int i = 1; i <= p; ++i)
        CHECK(H.edge_size(oc.ord.perm[i - 1]) >= H.edge_size(oc.ord.perm[i]));
      // Window membership is by the size ratio.
      double ratio = 1.0 + 3.0 * std::pow(tau, 0.25);
      for (EdgeId f : oc.W)
        CHECK((double)H.edge_size(f) <=
              ratio * H.edge_size(oc.e_star) + 1e-9);
    }
  }
}

TEST_CASE("reorder rejects bad parameters") {
  auto H = build(4, {{0, 1}});
  CHECK_THROWS_AS(reorder(H, 1.5, 1.0), Error);
  CHECK_THROWS_AS(reorder(H, 0.5, 0.0), Error);
}
