#pragma once

// Text formats accepted by the CLI and the JSON records it emits.
//
//   weights: "2,1,1,0;1,1,0,0;1,1,0,0"   (one vector per component)
//   kappa:   "1,0,0,-1;1/2,1/2,-1/2,-1/2;..."
//   facet:   "r=2;I1=2,3;I2=2,4;I3=2,4"
//
// Every number in a record is exact: integers, or rationals as "p/q" strings.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eigencone/rays.hpp"

namespace eigencone::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Throws DomainError on malformed text or when the shape is not s vectors
/// of length n (a negative n or s accepts any).
std::vector<DominantWeight> parse_weights(std::string_view text, int n = -1, int s = -1);
KappaTuple parse_kappa(std::string_view text, int n = -1, int s = -1);
/// Validates intersection number one.
FacetDescriptor parse_facet(std::string_view text, int n);

Json rational_json(const Rational& q);
Json kappa_json(const KappaTuple& x);
Json weights_json(const std::vector<DominantWeight>& weights);
Json facet_json(const FacetDescriptor& f);
Json provenance_json(const Provenance& p);
Json ray_json(const Ray& ray);

/// {"schema_version": "1", "command": ..., "parameters": ..., "result": ...}
Json output_record(std::string command, Json parameters, Json result);

}  // namespace eigencone::report
