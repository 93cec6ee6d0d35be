#pragma once

// Exact rational linear algebra. Everything here is exact; there is no
// floating point anywhere in the pipeline.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eigencone {

using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced rational num/den. Throws DomainError when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" into a reduced rational.
Rational parse_rational(std::string_view text);

/// "p" for integers, otherwise "p/q" (reduced, q > 0).
std::string to_string(const Rational& q);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  // Appends a row; the first row appended to an empty 0x0 matrix fixes cols.
  void append_row(std::span<const Rational> values);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination. Rows are first scaled to
/// integers, so all intermediate values are integer minors of the input.
std::size_t rank(const RatMatrix& m);

/// cols - rank.
std::size_t nullspace_dimension(const RatMatrix& m);

/// Smallest positive multiple of v that is integral with gcd 1.
/// Throws DomainError for the zero vector.
std::vector<Integer> primitive(std::span<const Rational> v);

}  // namespace eigencone
