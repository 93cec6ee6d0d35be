#pragma once

// Dominant weights of SL(n), their kappa (trace-zero) coordinates, and the
// tensor-invariant dimension used as an independent membership oracle.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eigencone/ratlinalg.hpp"

namespace eigencone {

/// lambda^(1) >= ... >= lambda^(n) = 0, integral.
class DominantWeight {
 public:
  /// Throws DomainError unless weakly decreasing with last entry zero.
  explicit DominantWeight(std::vector<long long> entries);
  /// Subtracts the last entry first, so any weakly decreasing vector works.
  static DominantWeight normalized(std::vector<long long> entries);
  static DominantWeight zero(int n);

  int n() const { return static_cast<int>(entries_.size()); }
  const std::vector<long long>& entries() const { return entries_; }
  long long operator[](std::size_t a) const { return entries_[a]; }
  /// |lambda|, the sum of entries.
  long long size() const;
  bool is_zero() const;
  DominantWeight scaled(long long factor) const;

  std::string to_string() const;  // "(2,1,1,0)"

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

 private:
  std::vector<long long> entries_;
};

/// A point of the trace-zero space h_{n,Q}.
class KappaPoint {
 public:
  KappaPoint() = default;
  /// Throws DomainError unless the coordinates sum to exactly zero.
  explicit KappaPoint(std::vector<Rational> coords);
  static KappaPoint zero(int n);

  int n() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](std::size_t a) const { return coords_[a]; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  KappaPoint& operator+=(const KappaPoint& other);
  KappaPoint& operator*=(const Rational& factor);

  std::string to_string() const;  // "(1/2,1/2,-1/2,-1/2)"

  friend bool operator==(const KappaPoint&, const KappaPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

KappaPoint operator+(KappaPoint a, const KappaPoint& b);
KappaPoint operator*(const Rational& factor, KappaPoint a);

/// s points of the same h_n; the ambient space of the eigencone.
class KappaTuple {
 public:
  KappaTuple() = default;
  /// Throws DimensionMismatch unless all points share n.
  explicit KappaTuple(std::vector<KappaPoint> points);
  static KappaTuple zero(int n, int s);

  int n() const { return points_.empty() ? 0 : points_.front().n(); }
  int s() const { return static_cast<int>(points_.size()); }
  const KappaPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<KappaPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  bool is_zero() const;

  KappaTuple& operator+=(const KappaTuple& other);
  KappaTuple& operator*=(const Rational& factor);

  /// All coordinates concatenated component by component.
  std::vector<Rational> flatten() const;
  std::string to_string() const;

  friend bool operator==(const KappaTuple&, const KappaTuple&) = default;

 private:
  std::vector<KappaPoint> points_;
};

KappaTuple operator+(KappaTuple a, const KappaTuple& b);
KappaTuple operator*(const Rational& factor, KappaTuple a);

/// x^(a) = lambda^(a) - |lambda| / n.
KappaPoint kappa(const DominantWeight& lambda);
KappaTuple kappa(std::span<const DominantWeight> lambdas);

struct ScaledWeight {
  DominantWeight weight;
  Rational scale;  // kappa(weight) == scale * x
};

/// The primitive integral dominant weight whose kappa is a positive multiple
/// of x. Throws DomainError for non-dominant x.
ScaledWeight weight_of_kappa(const KappaPoint& x);

/// b -> lambda^(b) - lambda^(b+1) for b = 1..n-1, zero coefficients omitted.
std::map<int, long long> fundamental_decomposition(const DominantWeight& lambda);

/// lambda*^(a) = lambda^(1) - lambda^(n+1-a).
DominantWeight dual_weight(const DominantWeight& lambda);

/// x^(1) >= ... >= x^(n).
bool is_dominant(const KappaPoint& x);

/// dim (V_{lambda_1} (x) ... (x) V_{lambda_s})^{SL(n)}. GL(n) Littlewood-
/// Richardson expansion of lambda_1 ... lambda_{s-1} (at most n rows),
/// paired with dual_weight(lambda_s) plus full columns of height n.
/// Returns 0 when n does not divide the total size.
std::uint64_t invariant_dimension(std::span<const DominantWeight> lambdas);

/// Least N > 0 with n | N * sum |lambda_i|; the smallest scale at which the
/// invariant space can be nonzero.
long long admissible_scale(std::span<const DominantWeight> lambdas);

}  // namespace eigencone
