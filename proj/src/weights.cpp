#include "eigencone/weights.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "eigencone/errors.hpp"
#include "eigencone/schubert.hpp"

namespace eigencone {

DominantWeight::DominantWeight(std::vector<long long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("dominant weight with no entries");
  for (std::size_t a = 1; a < entries_.size(); ++a)
    if (entries_[a] > entries_[a - 1])
      throw DomainError("weight " + to_string() + " is not weakly decreasing");
  if (entries_.back() != 0) throw DomainError("weight " + to_string() + " is not normalized (last entry must be 0)");
}

DominantWeight DominantWeight::normalized(std::vector<long long> entries) {
  if (entries.empty()) throw DomainError("dominant weight with no entries");
  const long long last = entries.back();
  for (auto& e : entries) e -= last;
  return DominantWeight(std::move(entries));
}

DominantWeight DominantWeight::zero(int n) { return DominantWeight(std::vector<long long>(n, 0)); }

long long DominantWeight::size() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool DominantWeight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long long e) { return e == 0; });
}

DominantWeight DominantWeight::scaled(long long factor) const {
  if (factor < 0) throw DomainError("negative scaling of a dominant weight");
  auto e = entries_;
  for (auto& x : e) x *= factor;
  return DominantWeight(std::move(e));
}

std::string DominantWeight::to_string() const {
  std::string s = "(";
  for (std::size_t a = 0; a < entries_.size(); ++a) {
    if (a) s += ",";
    s += std::to_string(entries_[a]);
  }
  return s + ")";
}

KappaPoint::KappaPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  Rational sum = 0;
  for (const auto& c : coords_) sum += c;
  if (sum != 0) throw DomainError("kappa point " + to_string() + " is not trace zero");
}

KappaPoint KappaPoint::zero(int n) {
  KappaPoint p;
  p.coords_.assign(n, Rational(0));
  return p;
}

bool KappaPoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

KappaPoint& KappaPoint::operator+=(const KappaPoint& other) {
  if (other.n() != n()) throw DimensionMismatch("adding kappa points of different n");
  for (std::size_t a = 0; a < coords_.size(); ++a) coords_[a] += other.coords_[a];
  return *this;
}

KappaPoint& KappaPoint::operator*=(const Rational& factor) {
  for (auto& c : coords_) c *= factor;
  return *this;
}

std::string KappaPoint::to_string() const {
  std::string s = "(";
  for (std::size_t a = 0; a < coords_.size(); ++a) {
    if (a) s += ",";
    s += eigencone::to_string(coords_[a]);
  }
  return s + ")";
}

KappaPoint operator+(KappaPoint a, const KappaPoint& b) { return a += b; }
KappaPoint operator*(const Rational& factor, KappaPoint a) { return a *= factor; }

KappaTuple::KappaTuple(std::vector<KappaPoint> points) : points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.n() != points_.front().n()) throw DimensionMismatch("kappa tuple components differ in n");
}

KappaTuple KappaTuple::zero(int n, int s) {
  return KappaTuple(std::vector<KappaPoint>(s, KappaPoint::zero(n)));
}

bool KappaTuple::is_zero() const {
  return std::all_of(points_.begin(), points_.end(), [](const KappaPoint& p) { return p.is_zero(); });
}

KappaTuple& KappaTuple::operator+=(const KappaTuple& other) {
  if (other.s() != s()) throw DimensionMismatch("adding kappa tuples of different s");
  for (std::size_t i = 0; i < points_.size(); ++i) points_[i] += other.points_[i];
  return *this;
}

KappaTuple& KappaTuple::operator*=(const Rational& factor) {
  for (auto& p : points_) p *= factor;
  return *this;
}

std::vector<Rational> KappaTuple::flatten() const {
  std::vector<Rational> out;
  for (const auto& p : points_) out.insert(out.end(), p.coords().begin(), p.coords().end());
  return out;
}

std::string KappaTuple::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) s += ",";
    s += points_[i].to_string();
  }
  return s + ")";
}

KappaTuple operator+(KappaTuple a, const KappaTuple& b) { return a += b; }
KappaTuple operator*(const Rational& factor, KappaTuple a) { return a *= factor; }

KappaPoint kappa(const DominantWeight& lambda) {
  const Rational mean(Rational(static_cast<long>(lambda.size())) / lambda.n());
  std::vector<Rational> x;
  x.reserve(lambda.n());
  for (long long e : lambda.entries()) x.push_back(Rational(static_cast<long>(e)) - mean);
  return KappaPoint(std::move(x));
}

KappaTuple kappa(std::span<const DominantWeight> lambdas) {
  std::vector<KappaPoint> pts;
  for (const auto& l : lambdas) pts.push_back(kappa(l));
  return KappaTuple(std::move(pts));
}

bool is_dominant(const KappaPoint& x) {
  for (int a = 1; a < x.n(); ++a)
    if (x[a] > x[a - 1]) return false;
  return true;
}

ScaledWeight weight_of_kappa(const KappaPoint& x) {
  if (!is_dominant(x)) throw DomainError("weight_of_kappa: " + x.to_string() + " is not dominant");
  if (x.is_zero()) return {DominantWeight::zero(x.n()), Rational(1)};
  std::vector<Rational> shifted;
  for (const auto& c : x.coords()) shifted.push_back(c - x[x.n() - 1]);
  const auto ints = primitive(shifted);
  std::vector<long long> entries;
  for (const auto& v : ints) {
    if (!v.fits_slong_p()) throw DomainError("weight entry does not fit in 64 bits");
    entries.push_back(v.get_si());
  }
  DominantWeight w(std::move(entries));
  // kappa(w) = scale * x; compare on the first nonzero coordinate.
  const KappaPoint k = kappa(w);
  Rational scale = 0;
  for (int a = 0; a < x.n(); ++a)
    if (x[a] != 0) {
      scale = k[a] / x[a];
      break;
    }
  return {std::move(w), scale};
}

std::map<int, long long> fundamental_decomposition(const DominantWeight& lambda) {
  std::map<int, long long> out;
  for (int b = 1; b < lambda.n(); ++b)
    if (long long c = lambda[b - 1] - lambda[b]; c != 0) out[b] = c;
  return out;
}

DominantWeight dual_weight(const DominantWeight& lambda) {
  const int n = lambda.n();
  std::vector<long long> e(n);
  for (int a = 0; a < n; ++a) e[a] = lambda[0] - lambda[n - 1 - a];
  return DominantWeight(std::move(e));
}

long long admissible_scale(std::span<const DominantWeight> lambdas) {
  if (lambdas.empty()) return 1;
  const long long n = lambdas.front().n();
  long long total = 0;
  for (const auto& l : lambdas) total += l.size();
  return n / std::gcd(n, total);
}

namespace {

using Partition = std::vector<int>;

Partition to_partition(const DominantWeight& w) {
  Partition p;
  for (long long e : w.entries()) {
    if (e > std::numeric_limits<int>::max()) throw DomainError("weight entry too large for LR expansion");
    p.push_back(static_cast<int>(e));
  }
  return p;
}

// Partitions rho with lambda <= rho <= bound and |rho| = |lambda| + |mu|,
// with their LR multiplicities c^rho_{lambda, mu}.
std::map<Partition, std::uint64_t> bounded_product(const Partition& lambda, const Partition& mu,
                                                   const Partition& bound) {
  std::map<Partition, std::uint64_t> out;
  const int rows = static_cast<int>(bound.size());
  const int size = std::accumulate(lambda.begin(), lambda.end(), 0) +
                   std::accumulate(mu.begin(), mu.end(), 0);
  const int step = mu.empty() ? 0 : mu.front();
  Partition cur;
  auto rec = [&](auto&& self, int a, int used) -> void {
    if (a == rows) {
      if (used == size)
        if (auto c = lr_coefficient(lambda, mu, cur); c != 0) out[cur] = c;
      return;
    }
    int upper = std::min(bound[a], lambda[a] + step);
    if (a > 0) upper = std::min(upper, cur[a - 1]);
    upper = std::min(upper, size - used);
    for (int v = upper; v >= lambda[a]; --v) {
      cur.push_back(v);
      self(self, a + 1, used + v);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

std::uint64_t invariant_dimension(std::span<const DominantWeight> lambdas) {
  if (lambdas.empty()) return 1;
  const int n = lambdas.front().n();
  for (const auto& l : lambdas)
    if (l.n() != n) throw DimensionMismatch("invariant_dimension: weights of different n");
  if (lambdas.size() == 1) return lambdas.front().is_zero() ? 1 : 0;

  long long head = 0;
  for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) head += lambdas[i].size();
  const DominantWeight target_dual = dual_weight(lambdas.back());
  const long long gap = head - target_dual.size();
  if (gap < 0 || gap % n != 0) return 0;

  // Target partition: dual of the last weight plus gap/n full columns.
  Partition target = to_partition(target_dual);
  for (auto& v : target) v += static_cast<int>(gap / n);

  // Iterated product of the leading weights, keeping only terms inside target.
  std::map<Partition, std::uint64_t> acc{{to_partition(lambdas[0]), 1}};
  for (std::size_t i = 1; i + 1 < lambdas.size(); ++i) {
    const Partition mu = to_partition(lambdas[i]);
    std::map<Partition, std::uint64_t> next;
    for (const auto& [rho, c] : acc) {
      bool inside = true;
      for (int a = 0; a < n; ++a) inside = inside && rho[a] <= target[a];
      if (!inside) continue;
      if (i + 1 == lambdas.size() - 1) {
        if (auto d = lr_coefficient(rho, mu, target); d != 0) next[target] += c * d;
      } else {
        for (const auto& [nu, d] : bounded_product(rho, mu, target)) next[nu] += c * d;
      }
    }
    acc = std::move(next);
  }
  auto it = acc.find(target);
  return it == acc.end() ? 0 : it->second;
}

}  // namespace eigencone
