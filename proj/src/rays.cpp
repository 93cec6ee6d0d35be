#include "eigencone/rays.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "eigencone/errors.hpp"

namespace eigencone {

namespace {

std::vector<Integer> primitive_weight_entries(const KappaTuple& x) {
  std::vector<Rational> shifted;
  shifted.reserve(static_cast<std::size_t>(x.n()) * x.s());
  for (const auto& p : x)
    for (const auto& c : p.coords()) shifted.push_back(c - p[p.n() - 1]);
  return primitive(shifted);
}

void require_ray_input(const KappaTuple& x) {
  if (x.s() == 0 || x.is_zero()) throw DomainError("the zero tuple does not span a ray");
  for (int i = 0; i < x.s(); ++i)
    if (!is_dominant(x[i]))
      throw DomainError("component " + std::to_string(i + 1) + " of " + x.to_string() +
                        " is not dominant");
}

long long to_ll(const Integer& v) {
  if (!v.fits_slong_p()) throw DomainError("ray weight entry does not fit in 64 bits");
  return v.get_si();
}

}  // namespace

std::vector<long long> ray_key(const KappaTuple& x) {
  require_ray_input(x);
  std::vector<long long> key;
  for (const auto& v : primitive_weight_entries(x)) key.push_back(to_ll(v));
  return key;
}

Ray make_ray(const KappaTuple& x, Provenance provenance) {
  const auto key = ray_key(x);
  const int n = x.n();
  std::vector<DominantWeight> weights;
  for (int i = 0; i < x.s(); ++i)
    weights.emplace_back(std::vector<long long>(key.begin() + i * n, key.begin() + (i + 1) * n));
  KappaTuple direction = kappa(weights);
  return Ray{std::move(direction), std::move(weights), std::move(provenance)};
}

void validate_product_point(const ProductPoint& p, std::uint64_t budget) {
  if (p.left.s() != p.right.s()) throw DimensionMismatch("product point sides differ in s");
  if (!is_member(p.left, budget))
    throw DomainError("left factor " + p.left.to_string() + " is not in Gamma_" +
                      std::to_string(p.left.n()));
  if (!is_member(p.right, budget))
    throw DomainError("right factor " + p.right.to_string() + " is not in Gamma_" +
                      std::to_string(p.right.n()));
}

namespace {

struct DivisorCache {
  std::shared_mutex mutex;
  std::map<std::vector<SchubertIndex>, std::vector<DominantWeight>> table;
};

DivisorCache& divisor_cache() {
  static DivisorCache cache;
  return cache;
}

std::vector<DominantWeight> compute_divisor_weights(std::span<const SchubertIndex> sets) {
  const int n = sets[0].n(), r = sets[0].r();
  int total = 0;
  for (const auto& A : sets) {
    if (A.n() != n || A.r() != r) throw DimensionMismatch("divisor_class: mixed Grassmannians");
    total += codim(A);
  }
  if (total != r * (n - r) + 1)
    throw DomainError("divisor_class needs codimensions summing to r(n-r)+1 = " +
                      std::to_string(r * (n - r) + 1) + ", got " + std::to_string(total));

  std::vector<SchubertIndex> work(sets.begin(), sets.end());
  std::vector<DominantWeight> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<long long> coeff(n + 1, 0);  // coeff[b], b = 1..n-1
    for (int b : sets[i].elements()) {
      if (b >= n || sets[i].contains(b + 1)) continue;
      work[i] = lower(sets[i], b);
      coeff[b] = static_cast<long long>(intersection_number(work));
    }
    work[i] = sets[i];
    std::vector<long long> entries(n, 0);
    long long running = 0;
    for (int a = n - 1; a >= 1; --a) {
      running += coeff[a];
      entries[a - 1] = running;
    }
    out.emplace_back(std::move(entries));
  }
  return out;
}

}  // namespace

std::vector<DominantWeight> divisor_weights(std::span<const SchubertIndex> sets) {
  if (sets.empty()) throw DomainError("divisor_class of no sets");
  std::vector<SchubertIndex> key(sets.begin(), sets.end());
  auto& cache = divisor_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
  }
  auto weights = compute_divisor_weights(sets);
  std::unique_lock lock(cache.mutex);
  cache.table.try_emplace(std::move(key), weights);
  return weights;
}

KappaTuple divisor_class(std::span<const SchubertIndex> sets) {
  return kappa(divisor_weights(sets));
}

Ray basic_ray(const FacetDescriptor& f, Type1Pair pair) {
  const auto pairs = type1_pairs(f);
  if (std::find(pairs.begin(), pairs.end(), pair) == pairs.end())
    throw DomainError("(" + std::to_string(pair.component) + "," + std::to_string(pair.a0) +
                      ") is not a type-1 pair of facet " + f.to_string());
  std::vector<SchubertIndex> sets = f.sets;
  sets[pair.component - 1] = raise(sets[pair.component - 1], pair.a0);
  auto weights = divisor_weights(sets);
  KappaTuple direction = kappa(weights);
  return Ray{std::move(direction), std::move(weights), BasicOrigin{f, pair}};
}

KappaTuple naive_induct(const FacetDescriptor& f, const ProductPoint& p) {
  const int n = f.n(), r = f.r, s = f.s();
  if (p.left.s() != s || p.right.s() != s || p.left.n() != r || p.right.n() != n - r)
    throw DimensionMismatch("product point does not match Gamma_" + std::to_string(r) +
                            " x Gamma_" + std::to_string(n - r) + " with s=" + std::to_string(s));
  std::vector<KappaPoint> ys;
  for (int i = 0; i < s; ++i) {
    const auto w = permutation_w(f.sets[i]);
    std::vector<Rational> y(n);
    for (int a = 1; a <= n; ++a) y[w[a - 1] - 1] = a <= r ? p.left[i][a - 1] : p.right[i][a - r - 1];
    ys.emplace_back(std::move(y));
  }
  return KappaTuple(std::move(ys));
}

InductionTrace induct_traced(const FacetDescriptor& f, const ProductPoint& p) {
  InductionTrace trace;
  trace.naive = naive_induct(f, p);
  trace.result = trace.naive;
  for (const auto& [i, b] : type1_pairs(f)) {
    CorrectionTerm term;
    term.component = i;
    term.b = b;
    term.gap = trace.naive[i - 1][b - 1] - trace.naive[i - 1][b - 2];
    term.divisor = f.sets;
    term.divisor[i - 1] = raise(f.sets[i - 1], b);
    term.divisor_class = divisor_class(term.divisor);
    if (term.gap != 0) trace.result += term.gap * term.divisor_class;
    trace.corrections.push_back(std::move(term));
  }
  return trace;
}

KappaTuple induct(const FacetDescriptor& f, const ProductPoint& p) {
  return induct_traced(f, p).result;
}

ProductPoint restrict_section(const FacetDescriptor& f, const KappaTuple& z) {
  if (!on_facet(f, z)) throw DomainError(z.to_string() + " is not on facet " + f.to_string());
  if (!in_F2(f, z)) throw DomainError(z.to_string() + " is not in F_2 of facet " + f.to_string());
  const int n = f.n(), r = f.r;
  std::vector<KappaPoint> left, right;
  for (int i = 0; i < f.s(); ++i) {
    const auto w = permutation_w(f.sets[i]);
    std::vector<Rational> l, rr;
    Rational lsum = 0, rsum = 0;
    for (int a = 1; a <= n; ++a) {
      const Rational& v = z[i][w[a - 1] - 1];
      (a <= r ? l : rr).push_back(v);
      (a <= r ? lsum : rsum) += v;
    }
    const Rational lmean = lsum / r, rmean = rsum / (n - r);
    for (auto& v : l) v -= lmean;
    for (auto& v : rr) v -= rmean;
    left.emplace_back(std::move(l));
    right.emplace_back(std::move(rr));
  }
  return ProductPoint{KappaTuple(std::move(left)), KappaTuple(std::move(right))};
}

bool is_extremal(const KappaTuple& x, std::uint64_t budget) {
  require_ray_input(x);
  if (!is_member(x, budget)) throw DomainError(x.to_string() + " is not in the eigencone");
  const int n = x.n(), s = x.s();
  const std::size_t dim = static_cast<std::size_t>(n) * s;
  RatMatrix tight;
  std::vector<Rational> row(dim);
  auto reset = [&] { std::fill(row.begin(), row.end(), Rational(0)); };
  for (int i = 0; i < s; ++i) {
    reset();
    for (int a = 0; a < n; ++a) row[i * n + a] = 1;
    tight.append_row(row);
  }
  for (const auto& f : enumerate_facets(n, s, budget)) {
    if (!on_facet(f, x)) continue;
    reset();
    for (int j = 0; j < s; ++j)
      for (int a : f.sets[j].elements()) row[j * n + a - 1] = 1;
    tight.append_row(row);
  }
  for (const auto& [i, a] : wall_tight_set(x)) {
    reset();
    row[(i - 1) * n + a - 1] = 1;
    row[(i - 1) * n + a] = -1;
    tight.append_row(row);
  }
  return nullspace_dimension(tight) == 1;
}

std::vector<Ray> facet_ray_candidates(const FacetDescriptor& f, std::span<const Ray> left_rays,
                                      std::span<const Ray> right_rays) {
  const int n = f.n(), r = f.r, s = f.s();
  std::vector<Ray> out;
  for (const auto& pair : type1_pairs(f)) out.push_back(basic_ray(f, pair));
  auto add_induced = [&](const ProductPoint& p, InducedOrigin::Side side, const Ray& source) {
    KappaTuple z = induct(f, p);
    if (z.is_zero()) return;
    out.push_back(make_ray(z, InducedOrigin{f, side, source.weights}));
  };
  for (const auto& e : left_rays)
    add_induced({e.direction, KappaTuple::zero(n - r, s)}, InducedOrigin::Side::left, e);
  for (const auto& e : right_rays)
    add_induced({KappaTuple::zero(r, s), e.direction}, InducedOrigin::Side::right, e);
  return out;
}

namespace {

RayCatalog classify(const std::vector<Ray>& candidates, std::uint64_t budget) {
  std::map<std::vector<long long>, const Ray*> unique;
  for (const auto& c : candidates) unique.try_emplace(ray_key(c.direction), &c);
  RayCatalog catalog;
  for (const auto& [key, ray] : unique)
    (is_extremal(ray->direction, budget) ? catalog.rays : catalog.rejected).push_back(*ray);
  return catalog;
}

struct RayMemo {
  std::shared_mutex mutex;
  std::map<std::pair<int, int>, std::unique_ptr<const RayCatalog>> table;
};

RayMemo& ray_memo() {
  static RayMemo memo;
  return memo;
}

}  // namespace

const RayCatalog& all_extremal_rays(int n, int s, std::uint64_t budget) {
  static const RayCatalog trivial;
  if (n < 1) throw DomainError("all_extremal_rays needs n >= 1");
  if (n == 1) return trivial;
  check_budget(n, s, budget);
  auto& memo = ray_memo();
  {
    std::shared_lock lock(memo.mutex);
    if (auto it = memo.table.find({n, s}); it != memo.table.end()) return *it->second;
  }
  std::vector<Ray> candidates;
  for (const auto& f : enumerate_facets(n, s, budget)) {
    const auto& left = all_extremal_rays(f.r, s, budget).rays;
    const auto& right = all_extremal_rays(n - f.r, s, budget).rays;
    auto c = facet_ray_candidates(f, left, right);
    candidates.insert(candidates.end(), std::make_move_iterator(c.begin()),
                      std::make_move_iterator(c.end()));
  }
  auto catalog = std::make_unique<RayCatalog>(classify(candidates, budget));
  std::unique_lock lock(memo.mutex);
  auto [it, inserted] = memo.table.try_emplace({n, s}, std::move(catalog));
  return *it->second;
}

RayCatalog facet_extremal_rays(const FacetDescriptor& f, std::uint64_t budget) {
  check_budget(f.n(), f.s(), budget);
  const auto& left = all_extremal_rays(f.r, f.s(), budget).rays;
  const auto& right = all_extremal_rays(f.n() - f.r, f.s(), budget).rays;
  return classify(facet_ray_candidates(f, left, right), budget);
}

bool is_F_ray(const Ray& ray, int max_scale) {
  const long long base = admissible_scale(ray.weights);
  for (int k = 1; k <= max_scale; ++k) {
    std::vector<DominantWeight> scaled;
    for (const auto& w : ray.weights) scaled.push_back(w.scaled(base * k));
    if (invariant_dimension(scaled) != 1) return false;
  }
  return true;
}

}  // namespace eigencone
