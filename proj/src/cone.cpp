#include "eigencone/cone.hpp"

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "eigencone/errors.hpp"

namespace eigencone {

std::string FacetDescriptor::to_string() const {
  std::string s = "r=" + std::to_string(r);
  for (std::size_t j = 0; j < sets.size(); ++j) {
    s += ";I" + std::to_string(j + 1) + "=";
    const auto& e = sets[j].elements();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(e[k]);
    }
  }
  return s;
}

FacetDescriptor make_facet(int n, std::vector<std::vector<int>> sets) {
  if (sets.empty()) throw DomainError("facet with no index sets");
  FacetDescriptor f;
  for (auto& e : sets) f.sets.emplace_back(n, std::move(e));
  f.r = f.sets.front().r();
  for (const auto& I : f.sets)
    if (I.r() != f.r) throw DomainError("facet index sets have different cardinalities");
  if (intersection_number(f.sets) != 1)
    throw DomainError("facet " + f.to_string() + " does not have intersection number 1");
  return f;
}

std::uint64_t enumeration_estimate(int n, int s) {
  // C(n, floor(n/2)) in 128-bit, then the s-th power with saturation.
  unsigned __int128 c = 1;
  const int k = n / 2;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 total = 1;
  for (int i = 0; i < s; ++i) {
    total *= c;
    if (total > cap) return cap;
  }
  return static_cast<std::uint64_t>(total);
}

void check_budget(int n, int s, std::uint64_t budget) {
  const auto estimate = enumeration_estimate(n, s);
  if (estimate > budget) throw BudgetExceeded(estimate, budget);
}

namespace {

void require_shape(const FacetDescriptor& f, const KappaTuple& x) {
  if (x.s() != f.s() || x.n() != f.n())
    throw DimensionMismatch("facet " + f.to_string() + " (n=" + std::to_string(f.n()) +
                            ", s=" + std::to_string(f.s()) + ") applied to a tuple with n=" +
                            std::to_string(x.n()) + ", s=" + std::to_string(x.s()));
}

struct FacetCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, int>, std::unique_ptr<const std::vector<FacetDescriptor>>> table;
};

FacetCache& facet_cache() {
  static FacetCache cache;
  return cache;
}

}  // namespace

Rational klyachko_value(const FacetDescriptor& f, const KappaTuple& x) {
  require_shape(f, x);
  Rational total = 0;
  for (int j = 0; j < f.s(); ++j)
    for (int a : f.sets[j].elements()) total += x[j][a - 1];
  return total;
}

const std::vector<FacetDescriptor>& enumerate_facets(int n, int s, std::uint64_t budget) {
  if (n < 2) throw DomainError("enumerate_facets needs n >= 2");
  if (s < 3) throw DomainError("enumerate_facets needs s >= 3, got s=" + std::to_string(s));
  auto& cache = facet_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find({n, s}); it != cache.table.end()) return *it->second;
  }
  check_budget(n, s, budget);
  auto facets = std::make_unique<std::vector<FacetDescriptor>>();
  for (int r = 1; r < n; ++r)
    for (auto& tuple : enumerate_point_tuples(n, s, r))
      facets->push_back(FacetDescriptor{r, std::move(tuple)});
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.table.try_emplace({n, s}, std::move(facets));
  return *it->second;
}

InequalitySystem inequality_system(int n, int s, std::uint64_t budget) {
  InequalitySystem sys{n, s, enumerate_facets(n, s, budget), {}};
  for (int i = 1; i <= s; ++i)
    for (int a = 1; a < n; ++a) sys.walls.push_back({i, a});
  return sys;
}

namespace {

void require_dominant(const KappaTuple& x) {
  for (int i = 0; i < x.s(); ++i)
    for (int a = 1; a < x.n(); ++a)
      if (x[i][a] > x[i][a - 1])
        throw DomainError("component " + std::to_string(i + 1) + " is not dominant: x^(" +
                          std::to_string(a) + ") = " + to_string(x[i][a - 1]) + " < x^(" +
                          std::to_string(a + 1) + ") = " + to_string(x[i][a]));
}

}  // namespace

std::vector<std::pair<FacetDescriptor, Rational>> violated_facets(const KappaTuple& x,
                                                                  std::uint64_t budget) {
  require_dominant(x);
  std::vector<std::pair<FacetDescriptor, Rational>> out;
  if (x.n() < 2) return out;
  for (const auto& f : enumerate_facets(x.n(), x.s(), budget))
    if (auto v = klyachko_value(f, x); v > 0) out.emplace_back(f, v);
  return out;
}

bool is_member(const KappaTuple& x, std::uint64_t budget) {
  require_dominant(x);
  if (x.n() < 2) return true;
  for (const auto& f : enumerate_facets(x.n(), x.s(), budget))
    if (klyachko_value(f, x) > 0) return false;
  return true;
}

bool on_facet(const FacetDescriptor& f, const KappaTuple& x) { return klyachko_value(f, x) == 0; }

std::vector<Type1Pair> type1_pairs(const FacetDescriptor& f) {
  std::vector<Type1Pair> out;
  for (int j = 0; j < f.s(); ++j)
    for (int a : f.sets[j].elements())
      if (a > 1 && !f.sets[j].contains(a - 1)) out.push_back({j + 1, a});
  return out;
}

bool in_F2(const FacetDescriptor& f, const KappaTuple& x) {
  require_shape(f, x);
  for (const auto& [j, b] : type1_pairs(f))
    if (x[j - 1][b - 1] != x[j - 1][b - 2]) return false;
  return true;
}

std::vector<WallPair> wall_tight_set(const KappaTuple& x) {
  std::vector<WallPair> out;
  for (int i = 0; i < x.s(); ++i)
    for (int a = 1; a < x.n(); ++a)
      if (x[i][a - 1] == x[i][a]) out.push_back({i + 1, a});
  return out;
}

}  // namespace eigencone
