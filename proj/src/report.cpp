#include "eigencone/report.hpp"

#include <charconv>

#include "eigencone/errors.hpp"

namespace eigencone::report {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

long long parse_int(const std::string& raw) {
  const std::string s = trim(raw);
  long long v = 0;
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw DomainError("malformed integer '" + raw + "'");
  return v;
}

void check_shape(std::size_t vectors, std::size_t length, int n, int s, std::string_view what) {
  if (s >= 0 && vectors != static_cast<std::size_t>(s))
    throw DomainError(std::string(what) + ": expected " + std::to_string(s) + " vectors, got " +
                      std::to_string(vectors));
  if (n >= 0 && length != static_cast<std::size_t>(n))
    throw DomainError(std::string(what) + ": expected vectors of length " + std::to_string(n) +
                      ", got " + std::to_string(length));
}

}  // namespace

std::vector<DominantWeight> parse_weights(std::string_view text, int n, int s) {
  std::vector<DominantWeight> out;
  for (const auto& vec : split(text, ';')) {
    std::vector<long long> entries;
    for (const auto& e : split(vec, ',')) entries.push_back(parse_int(e));
    check_shape(1, entries.size(), n, -1, "weights");
    out.push_back(DominantWeight::normalized(std::move(entries)));
    if (out.back().n() != out.front().n()) throw DomainError("weights: vectors of different length");
  }
  check_shape(out.size(), out.front().n(), n, s, "weights");
  return out;
}

KappaTuple parse_kappa(std::string_view text, int n, int s) {
  std::vector<KappaPoint> pts;
  for (const auto& vec : split(text, ';')) {
    std::vector<Rational> coords;
    for (const auto& c : split(vec, ',')) coords.push_back(parse_rational(c));
    check_shape(1, coords.size(), n, -1, "kappa");
    if (!pts.empty() && coords.size() != static_cast<std::size_t>(pts.front().n()))
      throw DomainError("kappa: vectors of different length");
    pts.emplace_back(std::move(coords));
  }
  check_shape(pts.size(), pts.front().n(), n, s, "kappa");
  return KappaTuple(std::move(pts));
}

FacetDescriptor parse_facet(std::string_view text, int n) {
  const auto fields = split(text, ';');
  if (fields.size() < 2) throw DomainError("facet: expected 'r=..;I1=..;I2=..'");
  auto value_of = [](const std::string& field, const std::string& name) {
    const auto eq = field.find('=');
    if (eq == std::string::npos || trim(field.substr(0, eq)) != name)
      throw DomainError("facet: expected field '" + name + "=...', got '" + field + "'");
    return field.substr(eq + 1);
  };
  const long long r = parse_int(value_of(fields[0], "r"));
  std::vector<std::vector<int>> sets;
  for (std::size_t j = 1; j < fields.size(); ++j) {
    std::vector<int> elems;
    for (const auto& e : split(value_of(fields[j], "I" + std::to_string(j)), ','))
      elems.push_back(static_cast<int>(parse_int(e)));
    if (static_cast<long long>(elems.size()) != r)
      throw DomainError("facet: I" + std::to_string(j) + " does not have r=" + std::to_string(r) +
                        " elements");
    sets.push_back(std::move(elems));
  }
  return make_facet(n, std::move(sets));
}

Json rational_json(const Rational& q) { return to_string(q); }

Json kappa_json(const KappaTuple& x) {
  Json out = Json::array();
  for (const auto& p : x) {
    Json v = Json::array();
    for (const auto& c : p.coords()) v.push_back(rational_json(c));
    out.push_back(std::move(v));
  }
  return out;
}

Json weights_json(const std::vector<DominantWeight>& weights) {
  Json out = Json::array();
  for (const auto& w : weights) out.push_back(w.entries());
  return out;
}

Json facet_json(const FacetDescriptor& f) {
  Json sets = Json::array();
  for (const auto& I : f.sets) sets.push_back(I.elements());
  return Json{{"id", f.to_string()}, {"r", f.r}, {"sets", std::move(sets)}};
}

Json provenance_json(const Provenance& p) {
  struct Visitor {
    Json operator()(const BasicOrigin& b) const {
      return Json{{"kind", "basic"},
                  {"facet", facet_json(b.facet)},
                  {"j0", b.pair.component},
                  {"a0", b.pair.a0}};
    }
    Json operator()(const InducedOrigin& i) const {
      return Json{{"kind", "induced"},
                  {"facet", facet_json(i.facet)},
                  {"side", i.side == InducedOrigin::Side::left ? "left" : "right"},
                  {"source_weights", weights_json(i.source)}};
    }
    Json operator()(const ImportedOrigin&) const { return Json{{"kind", "imported"}}; }
  };
  return std::visit(Visitor{}, p);
}

Json ray_json(const Ray& ray) {
  Json fundamental = Json::array();
  for (const auto& w : ray.weights) {
    Json m = Json::object();
    for (const auto& [b, c] : fundamental_decomposition(w)) m["omega_" + std::to_string(b)] = c;
    fundamental.push_back(std::move(m));
  }
  return Json{{"weight_tuple", weights_json(ray.weights)},
              {"kappa_tuple", kappa_json(ray.direction)},
              {"fundamental", std::move(fundamental)},
              {"provenance", provenance_json(ray.provenance)}};
}

Json output_record(std::string command, Json parameters, Json result) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", std::move(command)},
              {"parameters", std::move(parameters)},
              {"result", std::move(result)}};
}

}  // namespace eigencone::report
