#include "eigencone/verification.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <random>
#include <set>

#include "eigencone/errors.hpp"
#include "eigencone/rays.hpp"

namespace eigencone::verification {

bool CheckContext::expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures_;
    lines_.push_back("FAILED: " + what);
  }
  return ok;
}

namespace {

using WeightRows = std::vector<std::vector<long long>>;

std::vector<DominantWeight> weights_of(const WeightRows& rows) {
  std::vector<DominantWeight> out;
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

DominantWeight omega(int n, int b) {
  std::vector<long long> e(n, 0);
  std::fill(e.begin(), e.begin() + b, 1);
  return DominantWeight(std::move(e));
}

std::string tuple_string(const std::vector<DominantWeight>& ws) {
  std::string s = "(";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + ws[i].to_string();
  return s + ")";
}

KappaPoint kappa_point(std::initializer_list<std::pair<long, long>> coords) {
  std::vector<Rational> v;
  for (auto [p, q] : coords) v.push_back(make_rational(p, q));
  return KappaPoint(std::move(v));
}

bool catalog_contains(const RayCatalog& cat, const std::vector<DominantWeight>& ws) {
  const auto key = ray_key(kappa(ws));
  return std::any_of(cat.rays.begin(), cat.rays.end(),
                     [&](const Ray& r) { return ray_key(r.direction) == key; });
}

std::vector<std::vector<DominantWeight>> permutations_of(std::vector<DominantWeight> ws) {
  std::vector<std::vector<DominantWeight>> out;
  std::sort(ws.begin(), ws.end());
  do out.push_back(ws);
  while (std::next_permutation(ws.begin(), ws.end()));
  return out;
}

std::string provenance_string(const Provenance& p) {
  if (const auto* b = std::get_if<BasicOrigin>(&p))
    return "basic " + b->facet.to_string() + " (j0,a0)=(" + std::to_string(b->pair.component) +
           "," + std::to_string(b->pair.a0) + ")";
  if (const auto* i = std::get_if<InducedOrigin>(&p))
    return std::string("induced ") + (i->side == InducedOrigin::Side::left ? "left " : "right ") +
           tuple_string(i->source) + " on " + i->facet.to_string();
  return "imported";
}

// Random nonnegative integer combination of the given directions.
KappaTuple random_combination(std::mt19937_64& rng, const std::vector<KappaTuple>& dirs, int n,
                              int s, int max_coeff) {
  std::uniform_int_distribution<int> coeff(0, max_coeff);
  KappaTuple x = KappaTuple::zero(n, s);
  for (const auto& d : dirs) {
    const int c = coeff(rng);
    if (c) x += Rational(c) * d;
  }
  return x;
}

std::vector<KappaTuple> directions(const std::vector<Ray>& rays) {
  std::vector<KappaTuple> out;
  for (const auto& r : rays) out.push_back(r.direction);
  return out;
}

Rational jump(const KappaTuple& x, Type1Pair p) {
  const auto& xi = x[p.component - 1];
  return xi[p.a0 - 2] - xi[p.a0 - 1];
}

void check_n4_basic_ray(CheckContext& ctx) {
  const auto f = make_facet(4, {{2, 3}, {2, 4}, {2, 4}});
  const Ray ray = basic_ray(f, {1, 2});
  const auto expected = weights_of({{2, 1, 1, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}});
  ctx.note("weights " + tuple_string(ray.weights));
  ctx.note("kappa " + ray.direction.to_string());
  ctx.expect(ray.weights == expected, "weights differ from " + tuple_string(expected));
  const KappaTuple expected_kappa({kappa_point({{1, 1}, {0, 1}, {0, 1}, {-1, 1}}),
                                   kappa_point({{1, 2}, {1, 2}, {-1, 2}, {-1, 2}}),
                                   kappa_point({{1, 2}, {1, 2}, {-1, 2}, {-1, 2}})});
  ctx.expect(ray.direction == expected_kappa, "kappa differs from " + expected_kappa.to_string());
}

void check_gr58_basic_ray(CheckContext& ctx) {
  const std::vector<std::vector<int>> sets = {{3, 4, 5, 7, 8}, {2, 3, 5, 6, 8}, {2, 3, 5, 6, 8}};
  std::vector<SchubertIndex> idx;
  for (const auto& s : sets) idx.emplace_back(8, s);
  const auto number = intersection_number(idx);
  ctx.note("intersection number " + std::to_string(number));
  ctx.expect(number == 1, "intersection number is not 1");
  const Ray ray = basic_ray(make_facet(8, sets), {1, 3});
  ctx.note("weights " + tuple_string(ray.weights));
  const auto expected = weights_of(
      {{3, 3, 2, 2, 2, 0, 0, 0}, {4, 4, 4, 2, 2, 2, 0, 0}, {4, 4, 4, 2, 2, 2, 0, 0}});
  ctx.expect(ray.weights == expected, "weights differ from " + tuple_string(expected));
}

void check_sl9(CheckContext& ctx) {
  const std::vector<std::vector<int>> sets = {{3, 7, 8}, {3, 6, 9}, {3, 6, 9}};
  std::vector<SchubertIndex> idx;
  for (const auto& s : sets) idx.emplace_back(9, s);
  const auto number = intersection_number(idx);
  ctx.note("intersection number " + std::to_string(number));
  ctx.expect(number == 1, "intersection number is not 1");

  const auto f = make_facet(9, sets);
  const auto w110 = DominantWeight({1, 1, 0});
  const std::vector<DominantWeight> left = {w110, w110, w110};
  const ProductPoint p{kappa(left), KappaTuple::zero(6, 3)};
  const KappaTuple z = induct(f, p);
  const auto expected = weights_of({{3, 3, 3, 2, 2, 2, 2, 1, 0},
                                    {2, 2, 2, 1, 1, 1, 0, 0, 0},
                                    {2, 2, 2, 1, 1, 1, 0, 0, 0}});
  ctx.note("induced kappa " + z.to_string());
  ctx.expect(z == kappa(expected), "induction differs from kappa" + tuple_string(expected));
  ctx.expect(is_extremal(z), "induced point is not extremal");
  const auto dim = invariant_dimension(expected);
  ctx.note("invariant dimension at N=1: " + std::to_string(dim));
  ctx.expect(dim == 2, "invariant dimension is not 2");
  const Ray ray = make_ray(z);
  ctx.expect(!is_F_ray(ray, 1), "ray reported as an F-ray");
}

void check_n2(CheckContext& ctx) {
  const auto& facets = enumerate_facets(2, 3);
  ctx.note(std::to_string(facets.size()) + " facets");
  ctx.expect(facets.size() == 3, "expected 3 facets");
  for (const auto& f : facets)
    ctx.expect(type1_pairs(f).size() == 2, f.to_string() + " does not have q=2");

  const auto& cat = all_extremal_rays(2, 3);
  std::set<std::vector<long long>> got, want;
  for (const auto& r : cat.rays) {
    got.insert(ray_key(r.direction));
    ctx.note("ray " + tuple_string(r.weights));
  }
  for (const auto& ws : permutations_of({omega(2, 1), omega(2, 1), omega(2, 0)}))
    want.insert(ray_key(kappa(ws)));
  ctx.expect(got == want, "ray set differs from the permutations of (w1,w1,0)");
}

void check_n3(CheckContext& ctx) {
  const auto& cat = all_extremal_rays(3, 3);
  for (const auto& r : cat.rays)
    ctx.note("ray " + tuple_string(r.weights) + " from " + provenance_string(r.provenance));
  ctx.note(std::to_string(cat.rays.size()) + " rays, " + std::to_string(cat.rejected.size()) +
           " rejected candidates");
  const std::vector<DominantWeight> w222 = {omega(3, 2), omega(3, 2), omega(3, 2)};
  ctx.expect(catalog_contains(cat, w222), "missing " + tuple_string(w222));
  for (const auto& ws : permutations_of({omega(3, 1), omega(3, 0), omega(3, 2)}))
    ctx.expect(catalog_contains(cat, ws), "missing " + tuple_string(ws));
  for (const auto& r : cat.rays) {
    ctx.expect(is_extremal(r.direction), tuple_string(r.weights) + " is not extremal");
    ctx.expect(is_member(r.direction), tuple_string(r.weights) + " is not a member");
  }
}

void check_n4(CheckContext& ctx) {
  const auto& cat = all_extremal_rays(4, 3);
  ctx.note(std::to_string(cat.rays.size()) + " rays, " + std::to_string(cat.rejected.size()) +
           " rejected candidates");
  const auto target = weights_of({{2, 1, 1, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}});
  ctx.expect(catalog_contains(cat, target), "missing " + tuple_string(target));
}

void check_rigidity(CheckContext& ctx) {
  std::vector<Ray> rays;
  rays.push_back(basic_ray(make_facet(4, {{2, 3}, {2, 4}, {2, 4}}), {1, 2}));
  rays.push_back(basic_ray(
      make_facet(8, {{3, 4, 5, 7, 8}, {2, 3, 5, 6, 8}, {2, 3, 5, 6, 8}}), {1, 3}));
  for (const auto& f : enumerate_facets(2, 3))
    for (const auto& p : type1_pairs(f)) rays.push_back(basic_ray(f, p));
  for (const auto& ray : rays) {
    for (long long N = 1; N <= 3; ++N) {
      std::vector<DominantWeight> scaled;
      for (const auto& w : ray.weights) scaled.push_back(w.scaled(N));
      const auto dim = invariant_dimension(scaled);
      ctx.expect(dim == 1, "N=" + std::to_string(N) + " " + tuple_string(ray.weights) +
                               ": dimension " + std::to_string(dim));
    }
  }
  ctx.note(std::to_string(rays.size()) + " rays checked at N=1,2,3");
}

void check_facet_structure(CheckContext& ctx) {
  std::mt19937_64 rng(0x5eed0008);
  for (int n = 2; n <= 3; ++n) {
    const auto& rays = all_extremal_rays(n, 3).rays;
    for (const auto& f : enumerate_facets(n, 3)) {
      const auto pairs = type1_pairs(f);
      std::vector<Ray> basic;
      RatMatrix m;
      for (const auto& p : pairs) {
        basic.push_back(basic_ray(f, p));
        m.append_row(basic.back().direction.flatten());
      }
      ctx.expect(rank(m) == pairs.size(), f.to_string() + ": basic rays are dependent");
      for (std::size_t k = 0; k < pairs.size(); ++k)
        for (std::size_t l = 0; l < pairs.size(); ++l)
          ctx.expect(jump(basic[k].direction, pairs[l]) == (k == l ? 1 : 0),
                     f.to_string() + ": wrong jump of basic ray " + std::to_string(k + 1) +
                         " at pair " + std::to_string(l + 1));

      std::vector<KappaTuple> on;
      for (const auto& r : rays)
        if (on_facet(f, r.direction)) on.push_back(r.direction);
      for (int t = 0; t < 100; ++t) {
        const KappaTuple x = random_combination(rng, on, n, 3, 4);
        KappaTuple rest = x;
        bool nonneg = true;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          const Rational a = jump(x, pairs[k]);
          nonneg = nonneg && a >= 0;
          rest += Rational(-a) * basic[k].direction;
        }
        const bool ok = nonneg && on_facet(f, rest) && in_F2(f, rest) && is_member(rest);
        if (!ctx.expect(ok, f.to_string() + ": point " + x.to_string() + " does not decompose"))
          break;
      }
    }
  }
}

void check_induction(CheckContext& ctx) {
  std::mt19937_64 rng(0x5eed0009);
  std::uniform_int_distribution<int> num(0, 3), den(1, 3);
  int points = 0;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& f : enumerate_facets(n, 3)) {
      const int r = f.r;
      const auto left_dirs = r > 1 ? directions(all_extremal_rays(r, 3).rays)
                                   : std::vector<KappaTuple>{};
      const auto right_dirs = n - r > 1 ? directions(all_extremal_rays(n - r, 3).rays)
                                        : std::vector<KappaTuple>{};
      auto draw = [&] {
        return ProductPoint{random_combination(rng, left_dirs, r, 3, 3),
                            random_combination(rng, right_dirs, n - r, 3, 3)};
      };
      for (int t = 0; t < 50; ++t, ++points) {
        const ProductPoint p = draw(), q = draw();
        const KappaTuple z = induct(f, p);
        const std::string where = f.to_string() + " at " + p.left.to_string() + " x " +
                                  p.right.to_string();
        bool ok = ctx.expect(on_facet(f, z), where + ": not on the facet") &&
                  ctx.expect(in_F2(f, z), where + ": not in F2") &&
                  ctx.expect(is_member(z), where + ": not a member");
        const Rational alpha = make_rational(num(rng), den(rng));
        const Rational beta = make_rational(num(rng), den(rng));
        const ProductPoint mix{alpha * p.left + beta * q.left, alpha * p.right + beta * q.right};
        ok = ok && ctx.expect(induct(f, mix) == alpha * z + beta * induct(f, q),
                              where + ": not linear");
        ok = ok && ctx.expect(induct(f, restrict_section(f, z)) == z,
                              where + ": section does not invert the induction");
        if (!ok) return;
      }
    }
  }
  ctx.note(std::to_string(points) + " product points checked");
}

void for_each_weight(int n, long long max_entry,
                     const std::function<void(const DominantWeight&)>& visit) {
  std::vector<long long> e(n, 0);
  std::function<void(int, long long)> rec = [&](int a, long long bound) {
    if (a == n - 1) {
      visit(DominantWeight(e));
      return;
    }
    for (long long v = 0; v <= bound; ++v) {
      e[a] = v;
      rec(a + 1, v);
    }
  };
  rec(0, max_entry);
}

void check_oracle(CheckContext& ctx) {
  long long tuples = 0, members = 0;
  for (int n = 2; n <= 4; ++n) {
    std::vector<DominantWeight> all;
    for_each_weight(n, 2, [&](const DominantWeight& w) { all.push_back(w); });
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all) {
          const std::vector<DominantWeight> ws = {a, b, c};
          const bool member = is_member(kappa(ws));
          const long long N0 = admissible_scale(ws);
          std::vector<DominantWeight> scaled;
          for (const auto& w : ws) scaled.push_back(w.scaled(N0));
          const bool nonzero = invariant_dimension(scaled) > 0;
          ++tuples;
          members += member;
          ctx.expect(member == nonzero, tuple_string(ws) + ": member=" +
                                            (member ? "yes" : "no") + " but invariants " +
                                            (nonzero ? "nonzero" : "zero") + " at N=" +
                                            std::to_string(N0));
        }
  }
  ctx.note(std::to_string(tuples) + " tuples, " + std::to_string(members) + " members");
}

void check_schubert_backends(CheckContext& ctx) {
  long long products = 0;
  for (int rows = 1; rows <= 4; ++rows)
    for (int cols = 1; cols <= 5; ++cols) {
      const auto parts = all_box_partitions(rows, cols);
      for (const auto& p : parts)
        for (const auto& q : parts) {
          ++products;
          ctx.expect(lr_multiply(p, q) == lr_multiply_pieri(p, q),
                     "backends differ on " + p.to_string() + "*" + q.to_string() + " in " +
                         std::to_string(rows) + "x" + std::to_string(cols));
        }
    }
  long long triples = 0;
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      const auto idx = all_indices(n, r);
      for (const auto& a : idx)
        for (const auto& b : idx)
          for (const auto& c : idx) {
            ++triples;
            std::vector<SchubertIndex> t = {a, b, c};
            const auto value = intersection_number(t);
            std::sort(t.begin(), t.end());
            do ctx.expect(intersection_number(t) == value,
                          "permutation changes " + a.to_string() + b.to_string() + c.to_string());
            while (std::next_permutation(t.begin(), t.end()));
            const std::vector<SchubertIndex> d = {dual_index(a), dual_index(b), dual_index(c)};
            ctx.expect(intersection_number(d) == value,
                       "duality changes " + a.to_string() + b.to_string() + c.to_string());
          }
    }
  ctx.note(std::to_string(products) + " products, " + std::to_string(triples) + " triples");
}

}  // namespace

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"example-1.12", "basic ray of the n=4 facet ({2,3},{2,4},{2,4})", 1'000,
       check_n4_basic_ray},
      {"gr58-basic-ray", "basic ray of the Gr(5,8) facet", 10'000, check_gr58_basic_ray},
      {"sl9-induction", "induced non-F extremal ray of Gamma_9(3)", 60'000, check_sl9},
      {"n2-rays", "facets and extremal rays of Gamma_2(3)", 1'000, check_n2},
      {"n3-rays", "extremal rays of Gamma_3(3)", 10'000, check_n3},
      {"n4-rays", "extremal rays of Gamma_4(3)", 300'000, check_n4},
      {"rigidity", "invariants of basic rays are one-dimensional at N=1,2,3", 60'000,
       check_rigidity},
      {"facet-structure", "basic rays and facet decomposition for n<=3", 0,
       check_facet_structure},
      {"induction-properties", "induction lands in F2, is linear, and has a section", 120'000,
       check_induction},
      {"oracle-equivalence", "inequalities agree with nonvanishing invariants", 300'000,
       check_oracle},
      {"schubert-backends", "LR tableau and Pieri products agree; intersection symmetries", 0,
       check_schubert_backends},
  };
  return all;
}

CheckResult run_check(const Check& check) {
  CheckContext ctx;
  const auto start = std::chrono::steady_clock::now();
  try {
    check.body(ctx);
  } catch (const std::exception& e) {
    ctx.expect(false, std::string("exception: ") + e.what());
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  CheckResult res{check.id, check.title, !ctx.failed(), false, elapsed, check.limit_ms,
                  ctx.lines()};
  if (check.limit_ms > 0 && elapsed > check.limit_ms) {
    res.over_time = true;
    res.passed = false;
    res.details.push_back("FAILED: exceeded the time limit of " +
                          std::to_string(check.limit_ms) + " ms");
  }
  return res;
}

std::vector<CheckResult> run_checks(const std::optional<std::string>& only) {
  std::vector<CheckResult> out;
  for (const auto& c : checks())
    if (!only || c.id == *only) out.push_back(run_check(c));
  if (only && out.empty()) throw DomainError("unknown check id '" + *only + "'");
  return out;
}

}  // namespace eigencone::verification
