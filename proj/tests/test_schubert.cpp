#include <doctest.h>

#include <algorithm>

#include "eigencone/errors.hpp"
#include "eigencone/schubert.hpp"
#include "oracles.hpp"

using namespace eigencone;

namespace {

SchubertIndex idx(int n, std::vector<int> e) { return SchubertIndex(n, std::move(e)); }

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int a = from; a <= to; ++a) v.push_back(a);
  return v;
}

}  // namespace

TEST_CASE("index validation") {
  CHECK(idx(4, {3, 2}).elements() == std::vector<int>{2, 3});
  CHECK_THROWS_AS(idx(4, {2, 2}), DomainError);
  CHECK_THROWS_AS(idx(4, {0, 2}), DomainError);
  CHECK_THROWS_AS(idx(4, {1, 2, 3, 4}), DomainError);
  CHECK_THROWS_AS(idx(4, {}), DomainError);
}

TEST_CASE("codim and partitions") {
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r < n; ++r) {
      CHECK(codim(idx(n, range(1, r))) == r * (n - r));
      CHECK(codim(idx(n, range(n - r + 1, n))) == 0);
      CHECK(partition_of(idx(n, range(n - r + 1, n))) == BoxPartition::empty(r, n - r));
    }
  CHECK(codim(idx(4, {2, 3})) == 2);
  CHECK(partition_of(idx(4, {2, 3})) == BoxPartition::make(2, 2, {1, 1}));
  CHECK(partition_of(idx(4, {2, 4})) == BoxPartition::make(2, 2, {1, 0}));
}

TEST_CASE("dual partitions") {
  CHECK(dual_partition_of(idx(5, {4, 5})) == BoxPartition::make(3, 2, {2, 2, 2}));
  CHECK(dual_partition_of(idx(5, {1, 2})) == BoxPartition::empty(3, 2));
  CHECK(dual_partition_of(idx(4, {2, 3})) == BoxPartition::make(2, 2, {2, 0}));
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r)
      for (const auto& I : all_indices(n, r)) {
        CHECK(dual_partition_of(I).size() == r * (n - r) - codim(I));
        CHECK(index_of(partition_of(I)) == I);
        CHECK(partition_of(dual_index(I)) == partition_of(I).transpose());
        CHECK(dual_partition_of(I) == partition_of(I).complement().transpose());
        CHECK(dual_index(dual_index(I)) == I);
      }
  // In Gr(1,2) the formula fixes {1}; swapping {1} and {2} would break duality.
  CHECK(dual_index(idx(2, {1})) == idx(2, {1}));
  const std::vector<SchubertIndex> t = {idx(2, {1}), idx(2, {2}), idx(2, {2})};
  const std::vector<SchubertIndex> td = {dual_index(t[0]), dual_index(t[1]), dual_index(t[2])};
  CHECK(intersection_number(td) == intersection_number(t));
  CHECK(dual_index(idx(5, {2, 4})) == idx(5, {1, 3, 5}));
}

TEST_CASE("permutation w_I") {
  CHECK(permutation_w(idx(9, {3, 7, 8})) == std::vector<int>{3, 7, 8, 1, 2, 4, 5, 6, 9});
  CHECK(permutation_w(idx(5, {1, 2})) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(permutation_w(idx(5, {4, 5})) == std::vector<int>{4, 5, 1, 2, 3});
}

TEST_CASE("raise and lower") {
  CHECK(raise(idx(4, {2, 3}), 2) == idx(4, {1, 3}));
  CHECK(raise(idx(9, {3, 7, 8}), 3) == idx(9, {2, 7, 8}));
  CHECK_THROWS_AS(raise(idx(4, {2, 3}), 3), InvalidMove);
  CHECK_THROWS_AS(raise(idx(4, {1, 3}), 1), InvalidMove);
  CHECK_THROWS_AS(raise(idx(4, {1, 3}), 2), InvalidMove);
  CHECK(lower(idx(4, {1, 3}), 1) == idx(4, {2, 3}));
  CHECK(lower(idx(4, {1, 3}), 3) == idx(4, {1, 4}));
  CHECK_THROWS_AS(lower(idx(4, {1, 4}), 4), InvalidMove);
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r)
      for (const auto& I : all_indices(n, r))
        for (int b : I.elements())
          if (b > 1 && !I.contains(b - 1)) {
            const auto J = raise(I, b);
            CHECK(lower(J, b - 1) == I);
            CHECK(codim(J) == codim(I) + 1);
          }
}

TEST_CASE("LR products") {
  CHECK(lr_multiply(BoxPartition::make(2, 2, {1, 1}), BoxPartition::make(2, 2, {1, 0})) ==
        SchubertClassVector{{BoxPartition::make(2, 2, {2, 1}), 1}});
  CHECK(lr_multiply(BoxPartition::make(2, 2, {2, 1}), BoxPartition::make(2, 2, {1, 0})) ==
        SchubertClassVector{{BoxPartition::make(2, 2, {2, 2}), 1}});
  for (const auto& p : all_box_partitions(3, 3))
    CHECK(lr_multiply(p, BoxPartition::empty(3, 3)) == SchubertClassVector{{p, 1}});
  CHECK_THROWS_AS(lr_multiply(BoxPartition::empty(2, 2), BoxPartition::empty(2, 3)),
                  DimensionMismatch);
}

TEST_CASE("LR coefficients match the Schur polynomial oracle") {
  const std::vector<std::vector<int>> shapes = {{},     {1},    {2},       {1, 1},   {2, 1},
                                                {3},    {1, 1, 1}, {2, 2}, {3, 1},   {2, 1, 1},
                                                {3, 2}, {2, 2, 1}, {3, 1, 1}};
  for (const auto& l : shapes)
    for (const auto& m : shapes) {
      const auto size = [](const std::vector<int>& v) {
        int s = 0;
        for (int x : v) s += x;
        return s;
      };
      const int total = size(l) + size(m);
      for (const auto& p : all_box_partitions(4, 5)) {
        if (p.size() != total) continue;
        CAPTURE(l.size());
        CHECK(static_cast<long long>(lr_coefficient(l, m, p.parts)) == oracle::lr(l, m, p.parts));
      }
    }
  const std::vector<int> a = {2, 1}, nu = {3, 2, 1};
  CHECK(lr_coefficient(a, a, nu) == 2);
}

TEST_CASE("truncated products match the oracle in small boxes") {
  for (int rows = 1; rows <= 3; ++rows)
    for (int cols = 1; cols <= 3; ++cols)
      for (const auto& p : all_box_partitions(rows, cols))
        for (const auto& q : all_box_partitions(rows, cols)) {
          SchubertClassVector expected;
          for (const auto& nu : all_box_partitions(rows, cols))
            if (nu.size() == p.size() + q.size())
              if (auto c = oracle::lr(p.parts, q.parts, nu.parts)) expected[nu] = c;
          CHECK(lr_multiply(p, q) == expected);
          CHECK(lr_multiply_pieri(p, q) == expected);
        }
}

TEST_CASE("intersection numbers") {
  const std::vector<SchubertIndex> a = {idx(4, {2, 3}), idx(4, {2, 4}), idx(4, {2, 4})};
  CHECK(intersection_number(a) == 1);
  const std::vector<SchubertIndex> b = {idx(9, {3, 7, 8}), idx(9, {3, 6, 9}), idx(9, {3, 6, 9})};
  CHECK(intersection_number(b) == 1);
  const std::vector<SchubertIndex> c = {idx(8, {3, 4, 5, 7, 8}), idx(8, {2, 3, 5, 6, 8}),
                                        idx(8, {2, 3, 5, 6, 8})};
  CHECK(intersection_number(c) == 1);
  // sigma_1^4 in Gr(2,4)
  const std::vector<SchubertIndex> d(4, idx(4, {2, 4}));
  CHECK(intersection_number(d) == 2);
  const std::vector<SchubertIndex> wrong_degree = {idx(4, {2, 4}), idx(4, {2, 4}), idx(4, {2, 4})};
  CHECK(intersection_number(wrong_degree) == 0);
  const std::vector<SchubertIndex> mixed = {idx(4, {2, 4}), idx(5, {2, 4})};
  CHECK_THROWS_AS(intersection_number(mixed), DimensionMismatch);
}

TEST_CASE("point tuples") {
  const auto n2 = enumerate_point_tuples(2, 3, 1);
  CHECK(n2.size() == 3);
  const std::vector<SchubertIndex> t = {idx(2, {1}), idx(2, {2}), idx(2, {2})};
  CHECK(std::find(n2.begin(), n2.end(), t) != n2.end());

  const auto n3 = enumerate_point_tuples(3, 3, 1);
  auto has = [&](std::vector<int> e) {
    std::vector<SchubertIndex> tuple;
    for (int v : e) tuple.push_back(idx(3, {v}));
    return std::find(n3.begin(), n3.end(), tuple) != n3.end();
  };
  CHECK(has({1, 3, 3}));
  CHECK(has({3, 1, 3}));
  CHECK(has({3, 3, 1}));
  CHECK(has({3, 2, 2}));
  CHECK(has({2, 3, 2}));
  CHECK(has({2, 2, 3}));

  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r < n; ++r) {
      std::size_t brute = 0;
      const auto all = all_indices(n, r);
      for (const auto& a : all)
        for (const auto& b : all)
          for (const auto& c : all) {
            const std::vector<SchubertIndex> tuple = {a, b, c};
            brute += intersection_number(tuple) == 1;
          }
      CHECK(enumerate_point_tuples(n, 3, r).size() == brute);
      for (const auto& tuple : enumerate_point_tuples(n, 3, r)) {
        int total = 0;
        for (const auto& I : tuple) total += codim(I);
        CHECK(total == r * (n - r));
        CHECK(intersection_number(tuple) == 1);
      }
    }
}
