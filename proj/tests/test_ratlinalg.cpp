#include <doctest.h>

#include <random>

#include "eigencone/errors.hpp"
#include "eigencone/ratlinalg.hpp"
#include "oracles.hpp"

using namespace eigencone;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = make_rational(num(rng), den(rng));
  return m;
}

std::vector<std::vector<mpq_class>> rows_of(const RatMatrix& m) {
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
  return out;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("rank of identity and zero matrices") {
  CHECK(rank(RatMatrix::identity(5)) == 5);
  CHECK(nullspace_dimension(RatMatrix::identity(5)) == 0);
  CHECK(rank(RatMatrix(3, 4)) == 0);
  CHECK(nullspace_dimension(RatMatrix(3, 4)) == 4);
}

TEST_CASE("duplicated row lowers the rank") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    RatMatrix m = random_matrix(rng, 4, 5);
    const RatMatrix dedup = m;
    m.append_row(m.row(2));
    CHECK(rank(m) <= 4);
    CHECK(rank(m) == rank(dedup));
  }
}

TEST_CASE("rank agrees with Gaussian elimination and rank-nullity holds") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    RatMatrix m = random_matrix(rng, rows, cols);
    if (t % 3 == 0 && rows > 2)
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 2 - m(1, j) / 3;
    const auto r = rank(m);
    CHECK(r == oracle::rank(rows_of(m)));
    CHECK(r + nullspace_dimension(m) == cols);
  }
}

TEST_CASE("primitive vectors") {
  const std::vector<Rational> half = {make_rational(1, 2), make_rational(1, 2),
                                      make_rational(-1, 2), make_rational(-1, 2)};
  CHECK(primitive(half) == std::vector<Integer>{1, 1, -1, -1});
  const std::vector<Rational> two_four = {2, 4};
  CHECK(primitive(two_four) == std::vector<Integer>{1, 2});
  const std::vector<Rational> mixed = {make_rational(2, 3), make_rational(-4, 9), 0};
  CHECK(primitive(mixed) == std::vector<Integer>{3, -2, 0});
  const std::vector<Rational> zero(3);
  CHECK_THROWS_AS(primitive(zero), DomainError);
}
