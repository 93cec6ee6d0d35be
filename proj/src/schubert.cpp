#include "eigencone/schubert.hpp"

#include <algorithm>
#include <numeric>

#include "eigencone/errors.hpp"

namespace eigencone {

SchubertIndex::SchubertIndex(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  const int r = static_cast<int>(elements_.size());
  if (r < 1 || r > n - 1)
    throw DomainError("Schubert index needs 1 <= r <= n-1, got r=" + std::to_string(r) +
                      " n=" + std::to_string(n));
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw DomainError("Schubert index has repeated elements: " + to_string());
  if (elements_.front() < 1 || elements_.back() > n)
    throw DomainError("Schubert index " + to_string() + " not inside [1," + std::to_string(n) + "]");
}

bool SchubertIndex::contains(int b) const {
  return std::binary_search(elements_.begin(), elements_.end(), b);
}

std::string SchubertIndex::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(elements_[k]);
  }
  return s + "}";
}

BoxPartition BoxPartition::make(int rows, int cols, std::vector<int> parts) {
  if (rows < 0 || cols < 0) throw DomainError("negative box dimensions");
  while (parts.size() > static_cast<std::size_t>(rows) && parts.back() == 0) parts.pop_back();
  if (parts.size() > static_cast<std::size_t>(rows))
    throw DomainError("partition has more than " + std::to_string(rows) + " rows");
  parts.resize(rows, 0);
  for (int a = 0; a < rows; ++a) {
    if (parts[a] < 0 || parts[a] > cols)
      throw DomainError("partition part out of the " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " box");
    if (a > 0 && parts[a] > parts[a - 1]) throw DomainError("partition is not weakly decreasing");
  }
  return BoxPartition{rows, cols, std::move(parts)};
}

BoxPartition BoxPartition::empty(int rows, int cols) {
  return BoxPartition{rows, cols, std::vector<int>(rows, 0)};
}

BoxPartition BoxPartition::full(int rows, int cols) {
  return BoxPartition{rows, cols, std::vector<int>(rows, cols)};
}

int BoxPartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

BoxPartition BoxPartition::complement() const {
  BoxPartition c{rows, cols, std::vector<int>(rows)};
  for (int a = 0; a < rows; ++a) c.parts[a] = cols - parts[rows - 1 - a];
  return c;
}

BoxPartition BoxPartition::transpose() const {
  BoxPartition t{cols, rows, std::vector<int>(cols, 0)};
  for (int j = 0; j < cols; ++j)
    for (int a = 0; a < rows; ++a)
      if (parts[a] > j) ++t.parts[j];
  return t;
}

std::string BoxPartition::to_string() const {
  std::string s = "(";
  for (int a = 0; a < rows; ++a) {
    if (a) s += ",";
    s += std::to_string(parts[a]);
  }
  return s + ")";
}

int codim(const SchubertIndex& index) { return partition_of(index).size(); }

BoxPartition partition_of(const SchubertIndex& index) {
  const int n = index.n(), r = index.r();
  BoxPartition p{r, n - r, std::vector<int>(r)};
  for (int a = 1; a <= r; ++a) p.parts[a - 1] = n - r + a - index.elements()[a - 1];
  return p;
}

SchubertIndex index_of(const BoxPartition& p) {
  const int r = p.rows, n = p.rows + p.cols;
  std::vector<int> elems(r);
  for (int a = 1; a <= r; ++a) elems[a - 1] = n - r + a - p.parts[a - 1];
  return SchubertIndex(n, std::move(elems));
}

BoxPartition dual_partition_of(const SchubertIndex& index) {
  return partition_of(index).complement().transpose();
}

std::vector<int> permutation_w(const SchubertIndex& index) {
  std::vector<int> w = index.elements();
  for (int j = 1; j <= index.n(); ++j)
    if (!index.contains(j)) w.push_back(j);
  return w;
}

SchubertIndex raise(const SchubertIndex& index, int b) {
  if (!index.contains(b) || b <= 1 || index.contains(b - 1))
    throw InvalidMove("raise(" + index.to_string() + ", " + std::to_string(b) +
                      ") needs b in I, b > 1, b-1 not in I");
  std::vector<int> e = index.elements();
  std::replace(e.begin(), e.end(), b, b - 1);
  return SchubertIndex(index.n(), std::move(e));
}

SchubertIndex lower(const SchubertIndex& index, int b) {
  if (!index.contains(b) || b >= index.n() || index.contains(b + 1))
    throw InvalidMove("lower(" + index.to_string() + ", " + std::to_string(b) +
                      ") needs b in I, b < n, b+1 not in I");
  std::vector<int> e = index.elements();
  std::replace(e.begin(), e.end(), b, b + 1);
  return SchubertIndex(index.n(), std::move(e));
}

SchubertIndex dual_index(const SchubertIndex& index) {
  std::vector<int> e;
  for (int j = 1; j <= index.n(); ++j)
    if (!index.contains(j)) e.push_back(index.n() + 1 - j);
  return SchubertIndex(index.n(), std::move(e));
}

namespace {

std::vector<int> trimmed(std::span<const int> p) {
  std::vector<int> v(p.begin(), p.end());
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Depth-first enumeration of LR skew tableaux. Cells are visited in reverse
// reading order (rows top to bottom, each row right to left), which is the
// order in which the lattice condition is checked.
class LrTableauCounter {
 public:
  LrTableauCounter(std::vector<int> lambda, std::vector<int> mu, std::vector<int> nu)
      : lambda_(std::move(lambda)), mu_(std::move(mu)), nu_(std::move(nu)) {
    lambda_.resize(nu_.size(), 0);
    fill_.resize(nu_.size());
    for (std::size_t i = 0; i < nu_.size(); ++i) {
      fill_[i].assign(nu_[i], 0);
      for (int j = nu_[i] - 1; j >= lambda_[i]; --j) cells_.push_back({static_cast<int>(i), j});
    }
    count_.assign(mu_.size() + 1, 0);
  }

  std::uint64_t run() {
    total_ = 0;
    visit(0);
    return total_;
  }

 private:
  bool in_skew(int i, int j) const {
    return i >= 0 && i < static_cast<int>(nu_.size()) && j >= lambda_[i] && j < nu_[i];
  }

  void visit(std::size_t k) {
    if (k == cells_.size()) {
      ++total_;
      return;
    }
    const auto [i, j] = cells_[k];
    const int letters = static_cast<int>(mu_.size());
    int hi = in_skew(i, j + 1) ? fill_[i][j + 1] : letters;
    int lo = in_skew(i - 1, j) ? fill_[i - 1][j] + 1 : 1;
    for (int v = lo; v <= hi; ++v) {
      if (count_[v] >= mu_[v - 1]) continue;
      if (v > 1 && count_[v] >= count_[v - 1]) continue;
      fill_[i][j] = v;
      ++count_[v];
      visit(k + 1);
      --count_[v];
    }
    fill_[i][j] = 0;
  }

  std::vector<int> lambda_, mu_, nu_;
  std::vector<std::vector<int>> fill_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<int> count_;
  std::uint64_t total_ = 0;
};

void require_same_box(const BoxPartition& p, const BoxPartition& q) {
  if (p.rows != q.rows || p.cols != q.cols)
    throw DimensionMismatch("partitions live in different boxes: " + std::to_string(p.rows) + "x" +
                            std::to_string(p.cols) + " vs " + std::to_string(q.rows) + "x" +
                            std::to_string(q.cols));
}

// Partitions nu in the box with p <= nu, nu_a <= p_a + max_step, |nu| = size.
void containing_partitions(const BoxPartition& p, int max_step, int size, std::vector<int>& cur,
                           std::vector<BoxPartition>& out) {
  const int a = static_cast<int>(cur.size());
  const int used = std::accumulate(cur.begin(), cur.end(), 0);
  if (a == p.rows) {
    if (used == size) out.push_back(BoxPartition{p.rows, p.cols, cur});
    return;
  }
  int upper = std::min(p.cols, p.parts[a] + max_step);
  if (a > 0) upper = std::min(upper, cur[a - 1]);
  upper = std::min(upper, size - used);
  for (int v = upper; v >= p.parts[a]; --v) {
    // Remaining rows can take at most v each.
    if (used + v + v * (p.rows - a - 1) < size) break;
    cur.push_back(v);
    containing_partitions(p, max_step, size, cur, out);
    cur.pop_back();
  }
}

void subsets_rec(int n, int r, int start, std::vector<int>& cur, std::vector<SchubertIndex>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.emplace_back(n, cur);
    return;
  }
  for (int v = start; v <= n - (r - static_cast<int>(cur.size())) + 1; ++v) {
    cur.push_back(v);
    subsets_rec(n, r, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::uint64_t lr_coefficient(std::span<const int> lambda, std::span<const int> mu,
                             std::span<const int> nu) {
  std::vector<int> l = trimmed(lambda), m = trimmed(mu), v = trimmed(nu);
  if (l.size() > v.size()) return 0;
  auto sum = [](const std::vector<int>& x) { return std::accumulate(x.begin(), x.end(), 0); };
  if (sum(l) + sum(m) != sum(v)) return 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] > v[i]) return 0;
  if (m.empty()) return l == v ? 1 : 0;
  return LrTableauCounter(std::move(l), std::move(m), std::move(v)).run();
}

SchubertClassVector lr_multiply(const BoxPartition& p, const BoxPartition& q) {
  require_same_box(p, q);
  SchubertClassVector out;
  const int size = p.size() + q.size();
  if (size > p.rows * p.cols) return out;
  std::vector<BoxPartition> candidates;
  std::vector<int> cur;
  containing_partitions(p, q.rows > 0 ? q.parts[0] : 0, size, cur, candidates);
  for (const auto& nu : candidates) {
    if (auto c = lr_coefficient(p.parts, q.parts, nu.parts); c != 0) out[nu] = c;
  }
  return out;
}

SchubertClassVector multiply(const SchubertClassVector& v, const BoxPartition& q) {
  SchubertClassVector out;
  for (const auto& [p, c] : v)
    for (const auto& [nu, d] : lr_multiply(p, q)) out[nu] += c * d;
  return out;
}

std::uint64_t intersection_number(std::span<const SchubertIndex> indices) {
  if (indices.empty()) throw DomainError("intersection_number of no classes");
  const int n = indices[0].n(), r = indices[0].r();
  int total = 0;
  for (const auto& I : indices) {
    if (I.n() != n || I.r() != r)
      throw DimensionMismatch("intersection_number: mixed Grassmannians Gr(" + std::to_string(r) +
                              "," + std::to_string(n) + ") and Gr(" + std::to_string(I.r()) + "," +
                              std::to_string(I.n()) + ")");
    total += codim(I);
  }
  if (total != r * (n - r)) return 0;
  if (indices.size() == 1) return 1;  // sole class is the point class

  // Fold left over all but the last factor, then pair with the last one:
  // the point coefficient of sigma_nu * sigma_mu is [mu = complement(nu)].
  SchubertClassVector v{{partition_of(indices[0]), 1}};
  for (std::size_t k = 1; k + 1 < indices.size(); ++k) {
    v = multiply(v, partition_of(indices[k]));
    if (v.empty()) return 0;
  }
  auto it = v.find(partition_of(indices.back()).complement());
  return it == v.end() ? 0 : it->second;
}

std::vector<SchubertIndex> all_indices(int n, int r) {
  std::vector<SchubertIndex> out;
  std::vector<int> cur;
  subsets_rec(n, r, 1, cur, out);
  return out;
}

std::vector<BoxPartition> all_box_partitions(int rows, int cols) {
  std::vector<BoxPartition> out;
  const BoxPartition zero = BoxPartition::empty(rows, cols);
  for (int size = 0; size <= rows * cols; ++size) {
    std::vector<int> cur;
    containing_partitions(zero, cols, size, cur, out);
  }
  return out;
}

namespace {

void point_tuples_rec(const std::vector<SchubertIndex>& subsets, int s, int target,
                      std::vector<SchubertIndex>& chosen, const SchubertClassVector& partial,
                      std::vector<std::vector<SchubertIndex>>& out) {
  const int depth = static_cast<int>(chosen.size());
  if (depth == s - 1) {
    // The last index is forced: it must be the complement of a coefficient-1 term.
    std::vector<SchubertIndex> lasts;
    for (const auto& [nu, c] : partial)
      if (c == 1 && nu.size() <= target) lasts.push_back(index_of(nu.complement()));
    std::sort(lasts.begin(), lasts.end());
    for (auto& last : lasts) {
      chosen.push_back(std::move(last));
      out.push_back(chosen);
      chosen.pop_back();
    }
    return;
  }
  for (const auto& I : subsets) {
    const int c = codim(I);
    SchubertClassVector next;
    if (depth == 0) {
      next[partition_of(I)] = 1;
    } else {
      if (partial.begin()->first.size() + c > target) continue;
      next = multiply(partial, partition_of(I));
      if (next.empty()) continue;
    }
    chosen.push_back(I);
    point_tuples_rec(subsets, s, target, chosen, next, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<std::vector<SchubertIndex>> enumerate_point_tuples(int n, int s, int r) {
  if (r < 1 || r > n - 1) throw DomainError("enumerate_point_tuples needs 1 <= r <= n-1");
  if (s < 1) throw DomainError("enumerate_point_tuples needs s >= 1");
  std::vector<std::vector<SchubertIndex>> out;
  const auto subsets = all_indices(n, r);
  if (s == 1) {
    out.push_back({index_of(BoxPartition::full(r, n - r))});
    return out;
  }
  std::vector<SchubertIndex> chosen;
  point_tuples_rec(subsets, s, r * (n - r), chosen, {}, out);
  return out;
}

}  // namespace eigencone
