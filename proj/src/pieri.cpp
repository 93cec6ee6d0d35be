// Second, independent Schubert product: Jacobi-Trudi plus the Pieri rule.
// Used as an oracle for the tableau-counting backend in schubert.cpp.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "eigencone/errors.hpp"
#include "eigencone/schubert.hpp"

namespace eigencone {

namespace {

using SignedVector = std::map<BoxPartition, std::int64_t>;

// Adds every horizontal strip of size k to lambda inside the box.
void horizontal_strips(const BoxPartition& lambda, int k, int a, std::vector<int>& cur,
                       std::int64_t coeff, SignedVector& out) {
  if (a == lambda.rows) {
    if (k == 0) out[BoxPartition{lambda.rows, lambda.cols, cur}] += coeff;
    return;
  }
  const int upper = a == 0 ? lambda.cols : lambda.parts[a - 1];
  for (int add = 0; add <= k && lambda.parts[a] + add <= upper; ++add) {
    cur.push_back(lambda.parts[a] + add);
    horizontal_strips(lambda, k - add, a + 1, cur, coeff, out);
    cur.pop_back();
  }
}

SignedVector times_h(const SignedVector& v, int k) {
  SignedVector out;
  for (const auto& [lambda, c] : v) {
    std::vector<int> cur;
    horizontal_strips(lambda, k, 0, cur, c, out);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

}  // namespace

SchubertClassVector lr_multiply_pieri(const BoxPartition& p, const BoxPartition& q) {
  if (p.rows != q.rows || p.cols != q.cols)
    throw DimensionMismatch("partitions live in different boxes");
  int len = 0;
  while (len < q.rows && q.parts[len] > 0) ++len;

  // s_q = det(h_{q_i - i + j}), expanded over permutations.
  SignedVector total;
  std::vector<int> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    SignedVector term{{p, permutation_sign(perm)}};
    for (int i = 0; i < len && !term.empty(); ++i) {
      const int k = q.parts[i] - i + perm[i];
      if (k < 0) term.clear();
      else if (k > 0) term = times_h(term, k);
    }
    for (const auto& [nu, c] : term) total[nu] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));

  SchubertClassVector out;
  for (const auto& [nu, c] : total) {
    if (c < 0) throw Error("Pieri expansion produced a negative coefficient at " + nu.to_string());
    if (c > 0) out[nu] = static_cast<std::uint64_t>(c);
  }
  return out;
}

}  // namespace eigencone
