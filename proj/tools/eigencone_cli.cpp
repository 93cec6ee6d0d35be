// eigencone: membership, facets, extremal rays and induction for the
// eigencone Gamma_n(s) of SL(n).

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eigencone/errors.hpp"
#include "eigencone/report.hpp"
#include "eigencone/verification.hpp"

namespace ec = eigencone;
using ec::report::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

struct Options {
  int n = 0;
  int s = 0;
  std::optional<int> r;
  std::string facet, weights, kappa, left, right, only;
  bool json = false;
  bool diagnostics = false;
  std::optional<std::uint64_t> budget;
};

std::uint64_t effective_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("EIGENCONE_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ec::DomainError(std::string("EIGENCONE_BUDGET is not a nonnegative integer: ") + env);
  }
  return ec::kDefaultBudget;
}

void require_s(int s) {
  if (s < 3) throw CLI::ValidationError("--s", "s must be at least 3");
}

void emit(const Options& o, const Json& record, const std::string& human) {
  if (o.json)
    std::cout << record.dump(2) << "\n";
  else
    std::cout << human;
}

std::string weights_text(const std::vector<ec::DominantWeight>& ws) {
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? " " : "") + ws[i].to_string();
  return s;
}

std::string provenance_text(const ec::Provenance& p) {
  if (const auto* b = std::get_if<ec::BasicOrigin>(&p))
    return "basic on " + b->facet.to_string() + " at (" + std::to_string(b->pair.component) +
           "," + std::to_string(b->pair.a0) + ")";
  if (const auto* i = std::get_if<ec::InducedOrigin>(&p))
    return std::string("induced from ") +
           (i->side == ec::InducedOrigin::Side::left ? "left " : "right ") +
           weights_text(i->source) + " on " + i->facet.to_string();
  return "imported";
}

Json base_parameters(const Options& o) {
  Json p = Json::object();
  if (o.n) p["n"] = o.n;
  if (o.s) p["s"] = o.s;
  return p;
}

int cmd_member(const Options& o) {
  require_s(o.s);
  if (o.weights.empty() == o.kappa.empty())
    throw CLI::ValidationError("member", "give exactly one of --weights and --kappa");
  const ec::KappaTuple x = o.weights.empty()
                               ? ec::report::parse_kappa(o.kappa, o.n, o.s)
                               : ec::kappa(ec::report::parse_weights(o.weights, o.n, o.s));
  const auto budget = effective_budget(o);
  const bool member = ec::is_member(x, budget);
  Json violated = Json::array();
  std::string human = member ? "member\n" : "non-member\n";
  if (!member) {
    for (const auto& [f, v] : ec::violated_facets(x, budget)) {
      violated.push_back(Json{{"facet", ec::report::facet_json(f)},
                              {"klyachko_value", ec::report::rational_json(v)}});
      human += "  violated " + f.to_string() + " value " + ec::to_string(v) + "\n";
    }
  }
  Json params = base_parameters(o);
  if (!o.weights.empty()) params["weights"] = o.weights;
  if (!o.kappa.empty()) params["kappa"] = o.kappa;
  emit(o,
       ec::report::output_record("member", params,
                                 Json{{"member", member},
                                      {"kappa_tuple", ec::report::kappa_json(x)},
                                      {"violated", std::move(violated)}}),
       human);
  return member ? kExitOk : kExitNo;
}

int cmd_facets(const Options& o) {
  require_s(o.s);
  const auto& all = ec::enumerate_facets(o.n, o.s, effective_budget(o));
  Json list = Json::array();
  std::string human;
  std::size_t count = 0;
  for (const auto& f : all) {
    if (o.r && f.r != *o.r) continue;
    ++count;
    const auto q = ec::type1_pairs(f).size();
    Json entry = ec::report::facet_json(f);
    entry["q"] = q;
    list.push_back(std::move(entry));
    human += f.to_string() + "  q=" + std::to_string(q) + "\n";
  }
  human += std::to_string(count) + " facets\n";
  Json params = base_parameters(o);
  if (o.r) params["r"] = *o.r;
  emit(o,
       ec::report::output_record("facets", params,
                                 Json{{"count", count}, {"facets", std::move(list)}}),
       human);
  return kExitOk;
}

int cmd_rays(const Options& o) {
  const auto budget = effective_budget(o);
  ec::RayCatalog local;
  const ec::RayCatalog* cat = nullptr;
  Json params = base_parameters(o);
  if (!o.facet.empty()) {
    local = ec::facet_extremal_rays(ec::report::parse_facet(o.facet, o.n), budget);
    cat = &local;
    params["facet"] = o.facet;
  } else {
    require_s(o.s);
    cat = &ec::all_extremal_rays(o.n, o.s, budget);
  }
  Json rays = Json::array();
  std::string human;
  for (const auto& r : cat->rays) {
    rays.push_back(ec::report::ray_json(r));
    human += weights_text(r.weights) + "  [" + provenance_text(r.provenance) + "]\n";
  }
  human += std::to_string(cat->rays.size()) + " extremal rays\n";
  Json result{{"count", cat->rays.size()}, {"rays", std::move(rays)}};
  if (o.diagnostics) {
    params["diagnostics"] = true;
    Json rejected = Json::array();
    for (const auto& r : cat->rejected) {
      rejected.push_back(ec::report::ray_json(r));
      human += "rejected " + weights_text(r.weights) + "  [" + provenance_text(r.provenance) +
               "]\n";
    }
    result["rejected"] = std::move(rejected);
  }
  emit(o, ec::report::output_record("rays", params, result), human);
  return kExitOk;
}

Json rational_weights_json(const ec::KappaTuple& z) {
  Json out = Json::array();
  for (const auto& p : z) {
    Json v = Json::array();
    for (const auto& c : p.coords()) v.push_back(ec::report::rational_json(c - p[p.n() - 1]));
    out.push_back(std::move(v));
  }
  return out;
}

std::string rational_weights_text(const ec::KappaTuple& z) {
  std::string s;
  for (const auto& p : z) {
    s += s.empty() ? "(" : " (";
    for (int a = 0; a < p.n(); ++a) s += (a ? "," : "") + ec::to_string(p[a] - p[p.n() - 1]);
    s += ")";
  }
  return s;
}

int cmd_induct(const Options& o) {
  if (o.facet.empty() || o.left.empty() || o.right.empty())
    throw CLI::ValidationError("induct", "--facet, --left and --right are required");
  const auto f = ec::report::parse_facet(o.facet, o.n);
  require_s(f.s());
  const ec::ProductPoint p{
      ec::kappa(ec::report::parse_weights(o.left, f.r, f.s())),
      ec::kappa(ec::report::parse_weights(o.right, o.n - f.r, f.s()))};
  ec::validate_product_point(p, effective_budget(o));
  const auto trace = ec::induct_traced(f, p);

  Json corrections = Json::array();
  std::string human = "naive " + trace.naive.to_string() + "\n";
  for (const auto& c : trace.corrections) {
    Json divisor = Json::array();
    std::string sets;
    for (const auto& I : c.divisor) {
      divisor.push_back(I.elements());
      sets += I.to_string();
    }
    corrections.push_back(Json{{"component", c.component},
                               {"b", c.b},
                               {"gap", ec::report::rational_json(c.gap)},
                               {"divisor", std::move(divisor)},
                               {"divisor_class", ec::report::kappa_json(c.divisor_class)}});
    human += "correction i=" + std::to_string(c.component) + " b=" + std::to_string(c.b) +
             " gap " + ec::to_string(c.gap) + " divisor " + sets + " class " +
             c.divisor_class.to_string() + "\n";
  }
  human += "result weights " + rational_weights_text(trace.result) + "\n";
  human += "result kappa " + trace.result.to_string() + "\n";

  Json result{{"naive", ec::report::kappa_json(trace.naive)},
              {"corrections", std::move(corrections)},
              {"weights", rational_weights_json(trace.result)},
              {"kappa_tuple", ec::report::kappa_json(trace.result)}};
  if (!trace.result.is_zero()) {
    const auto ray = ec::make_ray(trace.result);
    result["ray_weight_tuple"] = ec::report::weights_json(ray.weights);
    human += "ray " + weights_text(ray.weights) + "\n";
  }
  Json params = base_parameters(o);
  params["facet"] = o.facet;
  params["left"] = o.left;
  params["right"] = o.right;
  emit(o, ec::report::output_record("induct", params, result), human);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto results = ec::verification::run_checks(
      o.only.empty() ? std::nullopt : std::optional<std::string>(o.only));
  bool all = true;
  Json list = Json::array();
  std::string human;
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back(Json{{"id", r.id},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"elapsed_ms", r.elapsed_ms},
                        {"limit_ms", r.limit_ms},
                        {"details", r.details}});
    human += std::string(r.passed ? "PASS  " : "FAIL  ") + r.id + "  (" +
             std::to_string(r.elapsed_ms) + " ms)  " + r.title + "\n";
    if (o.diagnostics || !r.passed)
      for (const auto& d : r.details) human += "      " + d + "\n";
  }
  Json params = Json::object();
  if (!o.only.empty()) params["only"] = o.only;
  emit(o,
       ec::report::output_record("verify", params,
                                 Json{{"all_passed", all}, {"checks", std::move(list)}}),
       human);
  return all ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigencone of SL(n): membership, facets, extremal rays, induction"};
  app.require_subcommand(1);
  Options o;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget,
                    "cap on C(n, n/2)^s (default: EIGENCONE_BUDGET or 100000000)");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "emit JSON"); };

  auto* member = app.add_subcommand("member", "test membership in Gamma_n(s)");
  member->add_option("--n", o.n, "rank n")->required()->check(CLI::PositiveNumber);
  member->add_option("--s", o.s, "number of components")->required();
  member->add_option("--weights", o.weights, "dominant weights, e.g. 1,0;1,0;0,0");
  member->add_option("--kappa", o.kappa, "trace-zero vectors, e.g. 1/2,-1/2;...");
  add_json(member);
  add_budget(member);

  auto* facets = app.add_subcommand("facets", "list the facets of Gamma_n(s)");
  facets->add_option("--n", o.n, "rank n")->required()->check(CLI::Range(2, 64));
  facets->add_option("--s", o.s, "number of components")->required();
  facets->add_option("--r", o.r, "only facets with this r");
  add_json(facets);
  add_budget(facets);

  auto* rays = app.add_subcommand("rays", "list the extremal rays of Gamma_n(s)");
  rays->add_option("--n", o.n, "rank n")->required()->check(CLI::Range(1, 64));
  rays->add_option("--s", o.s, "number of components");
  rays->add_option("--facet", o.facet, "only candidates of this facet, e.g. r=2;I1=2,3;...");
  rays->add_flag("--diagnostics", o.diagnostics, "include rejected candidates");
  add_json(rays);
  add_budget(rays);

  auto* induct = app.add_subcommand("induct", "induce a point of Gamma_r x Gamma_{n-r}");
  induct->add_option("--n", o.n, "rank n")->required()->check(CLI::Range(2, 64));
  induct->add_option("--facet", o.facet, "facet, e.g. r=3;I1=3,7,8;I2=3,6,9;I3=3,6,9");
  induct->add_option("--left", o.left, "s weights of length r");
  induct->add_option("--right", o.right, "s weights of length n-r");
  add_json(induct);
  add_budget(induct);

  auto* verify = app.add_subcommand("verify", "run the reproduction suite");
  verify->add_option("--only", o.only, "run a single check by id");
  verify->add_flag("--diagnostics", o.diagnostics, "print details of passing checks");
  add_json(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (member->parsed()) return cmd_member(o);
    if (facets->parsed()) return cmd_facets(o);
    if (rays->parsed()) return cmd_rays(o);
    if (induct->parsed()) return cmd_induct(o);
    return cmd_verify(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const ec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
