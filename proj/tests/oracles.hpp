#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library: Schur polynomials are expanded monomial by
// monomial from semistandard tableaux, and rank uses plain Gaussian
// elimination over the rationals.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Exponent = std::vector<int>;
using Poly = std::map<Exponent, long long>;

inline std::vector<int> trimmed(std::vector<int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// s_lambda(x_1..x_k) as the sum of x^T over semistandard tableaux T.
inline Poly schur(const std::vector<int>& lambda_in, int k) {
  const auto lambda = trimmed(lambda_in);
  Poly out;
  if (static_cast<int>(lambda.size()) > k) return out;
  std::vector<std::vector<int>> t(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) t[i].assign(lambda[i], 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) cells.push_back({static_cast<int>(i), j});
  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == cells.size()) {
      Exponent e(k, 0);
      for (const auto& row : t)
        for (int v : row) ++e[v];
      ++out[e];
      return;
    }
    const auto [i, j] = cells[c];
    int lo = 0;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v < k; ++v) {
      t[i][j] = v;
      fill(c + 1);
    }
  };
  fill(0);
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Expansion of a symmetric polynomial in Schur polynomials by peeling off the
// lexicographically largest monomial.
inline std::map<std::vector<int>, long long> schur_expand(Poly p, int k) {
  std::map<std::vector<int>, long long> out;
  while (!p.empty()) {
    const auto [lead, c] = *p.rbegin();
    out[trimmed(lead)] += c;
    for (const auto& [e, v] : schur(lead, k)) {
      p[e] -= c * v;
      if (p[e] == 0) p.erase(e);
    }
  }
  return out;
}

// c^nu_{lambda, mu}, computed in enough variables that no term is lost.
inline long long lr(const std::vector<int>& lambda, const std::vector<int>& mu,
                    const std::vector<int>& nu) {
  const int k = static_cast<int>(std::max(trimmed(nu).size(),
                                          trimmed(lambda).size() + trimmed(mu).size()));
  if (k == 0) return 1;
  const auto exp = schur_expand(multiply(schur(lambda, k), schur(mu, k)), k);
  const auto it = exp.find(trimmed(nu));
  return it == exp.end() ? 0 : it->second;
}

// dim of SL(n) invariants in V_{lambda_1} x ... x V_{lambda_s}: multiplicity
// of the determinant powers in the product of GL(n) characters.
inline long long invariant_dimension(const std::vector<std::vector<int>>& lambdas, int n) {
  Poly p{{Exponent(n, 0), 1}};
  for (const auto& l : lambdas) p = multiply(p, schur(l, n));
  long long total = 0;
  for (const auto& [shape, c] : schur_expand(p, n)) {
    const bool rectangular =
        shape.empty() || (static_cast<int>(shape.size()) == n &&
                          std::all_of(shape.begin(), shape.end(),
                                      [&](int v) { return v == shape.front(); }));
    if (rectangular) total += c;
  }
  return total;
}

inline std::size_t rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
