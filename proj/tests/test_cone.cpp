#include <doctest.h>

#include <algorithm>

#include "eigencone/cone.hpp"
#include "eigencone/errors.hpp"

using namespace eigencone;

namespace {

KappaTuple kt(const std::vector<std::vector<long long>>& rows) {
  std::vector<DominantWeight> ws;
  for (const auto& r : rows) ws.emplace_back(r);
  return kappa(ws);
}

}  // namespace

TEST_CASE("facet construction") {
  const auto f = make_facet(4, {{2, 3}, {2, 4}, {2, 4}});
  CHECK(f.r == 2);
  CHECK(f.to_string() == "r=2;I1=2,3;I2=2,4;I3=2,4");
  CHECK_THROWS_AS(make_facet(4, {{2, 4}, {2, 4}, {2, 4}}), DomainError);
  CHECK_THROWS_AS(make_facet(4, {{2, 4}, {2}, {2, 4}}), DomainError);
}

TEST_CASE("klyachko values") {
  const auto f = make_facet(2, {{1}, {2}, {2}});
  CHECK(klyachko_value(f, kt({{1, 0}, {1, 0}, {0, 0}})) == 0);
  CHECK(klyachko_value(f, KappaTuple::zero(2, 3)) == 0);
  const auto g = make_facet(4, {{2, 3}, {2, 4}, {2, 4}});
  CHECK(klyachko_value(g, kt({{2, 1, 1, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}})) == 0);
  CHECK_THROWS_AS(klyachko_value(g, KappaTuple::zero(3, 3)), DimensionMismatch);
}

TEST_CASE("facet counts") {
  // counts from an independent prototype enumeration
  CHECK(enumerate_facets(2, 3).size() == 3);
  CHECK(enumerate_facets(3, 3).size() == 12);
  CHECK(enumerate_facets(4, 3).size() == 41);
  CHECK(enumerate_facets(5, 3).size() == 142);
  for (int n = 2; n <= 5; ++n)
    for (const auto& f : enumerate_facets(n, 3)) CHECK(intersection_number(f.sets) == 1);
  const auto& n3 = enumerate_facets(3, 3);
  for (const auto& sets : std::vector<std::vector<std::vector<int>>>{
           {{1}, {3}, {3}}, {{3}, {2}, {2}}, {{1, 2}, {2, 3}, {2, 3}}, {{1, 3}, {1, 3}, {2, 3}}})
    CHECK(std::find(n3.begin(), n3.end(), make_facet(3, sets)) != n3.end());
  CHECK(std::is_sorted(n3.begin(), n3.end()));
  CHECK(enumerate_facets(3, 4).size() > enumerate_facets(3, 3).size());
  CHECK_THROWS_AS(enumerate_facets(3, 2), DomainError);
}

TEST_CASE("budget guard") {
  CHECK(enumeration_estimate(4, 3) == 216);
  CHECK_THROWS_AS(enumerate_facets(6, 3, 100), BudgetExceeded);
  try {
    check_budget(6, 3, 100);
  } catch (const BudgetExceeded& e) {
    CHECK(e.estimate() == 8000);
    CHECK(e.budget() == 100);
  }
  CHECK(enumeration_estimate(200, 50) == UINT64_MAX);
}

TEST_CASE("membership") {
  CHECK(is_member(KappaTuple::zero(3, 3)));
  CHECK(is_member(kt({{1, 0}, {1, 0}, {0, 0}})));
  CHECK_FALSE(is_member(kt({{1, 0}, {0, 0}, {0, 0}})));
  const auto v = violated_facets(kt({{1, 0}, {0, 0}, {0, 0}}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].first == make_facet(2, {{1}, {2}, {2}}));
  CHECK(v[0].second == make_rational(1, 2));
  const std::vector<Rational> bad = {-1, 1};
  CHECK_THROWS_AS(is_member(KappaTuple({KappaPoint(bad), KappaPoint::zero(2),
                                        KappaPoint::zero(2)})),
                  DomainError);
  CHECK(is_member(KappaTuple::zero(1, 3)));
}

TEST_CASE("facet tightness") {
  const auto g = make_facet(4, {{2, 3}, {2, 4}, {2, 4}});
  const auto ex = kt({{2, 1, 1, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}});
  CHECK(on_facet(g, ex));
  CHECK_FALSE(in_F2(g, ex));
  CHECK(on_facet(g, KappaTuple::zero(4, 3)));
  CHECK(in_F2(g, KappaTuple::zero(4, 3)));
  CHECK(on_facet(make_facet(2, {{1}, {2}, {2}}), kt({{1, 0}, {1, 0}, {0, 0}})));
}

TEST_CASE("type-1 pairs") {
  CHECK(type1_pairs(make_facet(2, {{1}, {2}, {2}})) == std::vector<Type1Pair>{{2, 2}, {3, 2}});
  CHECK(type1_pairs(make_facet(3, {{3}, {2}, {2}})).size() == 3);
  CHECK(type1_pairs(make_facet(4, {{1, 2}, {3, 4}, {3, 4}})).size() == 2);
}

TEST_CASE("wall tight sets") {
  CHECK(wall_tight_set(KappaTuple::zero(3, 3)).size() == 6);
  const auto t = wall_tight_set(kt({{2, 1, 1, 0}}));
  CHECK(t == std::vector<WallPair>{{1, 2}});
  const auto w2 = wall_tight_set(kt({{1, 1, 0, 0}}));
  CHECK(w2 == std::vector<WallPair>{{1, 1}, {1, 3}});
}
