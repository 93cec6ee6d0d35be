#include <doctest.h>

#include "eigencone/errors.hpp"
#include "eigencone/report.hpp"

using namespace eigencone;
using report::Json;

namespace {

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

}  // namespace

TEST_CASE("weight parsing") {
  const auto w = report::parse_weights("2,1,1,0;1,1,0,0;1,1,0,0", 4, 3);
  CHECK(w.size() == 3);
  CHECK(w[0] == DominantWeight({2, 1, 1, 0}));
  CHECK(report::parse_weights(" 3, 2 ,2;1,1,1")[0] == DominantWeight({1, 0, 0}));
  CHECK_THROWS_AS(report::parse_weights("1,0;1,0", 2, 3), DomainError);
  CHECK_THROWS_AS(report::parse_weights("1,0,0;1,0", -1, 2), DomainError);
  CHECK_THROWS_AS(report::parse_weights("1,x;1,0;0,0"), DomainError);
  CHECK_THROWS_AS(report::parse_weights("0,1;1,0;0,0"), DomainError);
  CHECK_THROWS_AS(report::parse_weights("1,,0;1,0;0,0"), DomainError);
}

TEST_CASE("kappa parsing") {
  const auto x = report::parse_kappa("1/2,-1/2;0,0;-1/2,1/2", 2, 3);
  CHECK(x[0][0] == make_rational(1, 2));
  CHECK(x[2][1] == make_rational(1, 2));
  CHECK_THROWS_AS(report::parse_kappa("1,0;0,0;0,0"), DomainError);
  CHECK_THROWS_AS(report::parse_kappa("1/2,-1/2;0,0,0;0,0"), DomainError);
}

TEST_CASE("facet parsing") {
  const auto f = report::parse_facet("r=2;I1=2,3;I2=2,4;I3=2,4", 4);
  CHECK(f == make_facet(4, {{2, 3}, {2, 4}, {2, 4}}));
  CHECK(report::parse_facet(f.to_string(), 4) == f);
  CHECK_THROWS_AS(report::parse_facet("r=2;I1=2,4;I2=2,4;I3=2,4", 4), DomainError);
  CHECK_THROWS_AS(report::parse_facet("r=2;I1=2;I2=2,4;I3=2,4", 4), DomainError);
  CHECK_THROWS_AS(report::parse_facet("r=2;J1=2,3;I2=2,4;I3=2,4", 4), DomainError);
  CHECK_THROWS_AS(report::parse_facet("2,3;2,4;2,4", 4), DomainError);
}

TEST_CASE("ray records are exact") {
  const Ray ray = basic_ray(make_facet(4, {{2, 3}, {2, 4}, {2, 4}}), {1, 2});
  const Json j = report::ray_json(ray);
  CHECK(j["weight_tuple"] == Json::parse("[[2,1,1,0],[1,1,0,0],[1,1,0,0]]"));
  CHECK(j["kappa_tuple"] ==
        Json::parse(R"([["1","0","0","-1"],["1/2","1/2","-1/2","-1/2"],["1/2","1/2","-1/2","-1/2"]])"));
  CHECK(j["fundamental"][0] == Json::parse(R"({"omega_1":1,"omega_3":1})"));
  CHECK(j["provenance"]["kind"] == "basic");
  CHECK(j["provenance"]["facet"]["id"] == "r=2;I1=2,3;I2=2,4;I3=2,4");
  CHECK(j["provenance"]["j0"] == 1);
  CHECK(j["provenance"]["a0"] == 2);
  CHECK_FALSE(has_float(j));
}

TEST_CASE("output records") {
  const Json rec = report::output_record("facets", Json{{"n", 2}}, Json{{"count", 3}});
  CHECK(rec.dump() ==
        R"({"schema_version":"1","command":"facets","parameters":{"n":2},"result":{"count":3}})");
  for (const auto& r : all_extremal_rays(3, 3).rays) CHECK_FALSE(has_float(report::ray_json(r)));
}
