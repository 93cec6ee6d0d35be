#pragma once

// Schubert calculus on Grassmannians Gr(r, n): Schubert indices, box
// partitions, and exact Littlewood-Richardson products in H*(Gr(r, n)).

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace eigencone {

/// A cardinality-r subset I = {i_1 < ... < i_r} of [n] = {1, ..., n},
/// 1 <= r <= n - 1. Names the Schubert class sigma_I of Gr(r, n).
class SchubertIndex {
 public:
  /// Elements may be given in any order; they are sorted. Throws DomainError
  /// unless they are distinct, in [1, n], and 1 <= r <= n - 1.
  SchubertIndex(int n, std::vector<int> elements);

  int n() const { return n_; }
  int r() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int b) const;

  std::string to_string() const;  // "{2,3}"

  friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;
  friend std::strong_ordering operator<=>(const SchubertIndex& a, const SchubertIndex& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

 private:
  int n_;
  std::vector<int> elements_;
};

/// Weakly decreasing parts fitting in a rows x cols box.
struct BoxPartition {
  int rows = 0;
  int cols = 0;
  std::vector<int> parts;  // exactly `rows` entries, trailing zeros kept

  /// Validates shape; pads with zeros up to `rows`.
  static BoxPartition make(int rows, int cols, std::vector<int> parts);
  static BoxPartition empty(int rows, int cols);
  static BoxPartition full(int rows, int cols);

  int size() const;
  /// Rotated box complement: cols - parts[rows - 1 - a].
  BoxPartition complement() const;
  /// Transpose, living in the cols x rows box.
  BoxPartition transpose() const;

  std::string to_string() const;  // "(2,1)"

  friend bool operator==(const BoxPartition&, const BoxPartition&) = default;
  friend auto operator<=>(const BoxPartition&, const BoxPartition&) = default;
};

/// Element of H*(Gr(r,n)) in the Schubert basis; zero coefficients absent.
using SchubertClassVector = std::map<BoxPartition, std::uint64_t>;

int codim(const SchubertIndex& index);
BoxPartition partition_of(const SchubertIndex& index);
/// Inverse of partition_of, with n = rows + cols.
SchubertIndex index_of(const BoxPartition& p);
/// Transpose of the box complement of partition_of(index).
BoxPartition dual_partition_of(const SchubertIndex& index);

/// w_I as the sequence of images (w(1), ..., w(n)): the elements of I in
/// order followed by the elements of [n] - I in order.
std::vector<int> permutation_w(const SchubertIndex& index);

/// I^{+,b} = (I - {b}) u {b - 1}. Throws InvalidMove unless b in I, b > 1
/// and b - 1 not in I.
SchubertIndex raise(const SchubertIndex& index, int b);
/// I^{-,b} = (I - {b}) u {b + 1}. Throws InvalidMove unless b in I, b < n
/// and b + 1 not in I.
SchubertIndex lower(const SchubertIndex& index, int b);

/// I* = {n + 1 - j : j in [n] - I}, an index of Gr(n - r, n).
SchubertIndex dual_index(const SchubertIndex& index);

// Littlewood-Richardson coefficient c^nu_{lambda, mu} for ordinary
// partitions (trailing zeros allowed), counted as LR skew tableaux of
// shape nu/lambda and content mu.
std::uint64_t lr_coefficient(std::span<const int> lambda, std::span<const int> mu,
                             std::span<const int> nu);

/// sigma_p * sigma_q truncated to the common box, by LR tableau counting.
/// Throws DimensionMismatch when the boxes differ.
SchubertClassVector lr_multiply(const BoxPartition& p, const BoxPartition& q);

/// Same product computed independently: Jacobi-Trudi expansion of sigma_q in
/// complete homogeneous classes, each applied to sigma_p by the Pieri rule.
SchubertClassVector lr_multiply_pieri(const BoxPartition& p, const BoxPartition& q);

/// (sum over terms) v * sigma_q.
SchubertClassVector multiply(const SchubertClassVector& v, const BoxPartition& q);

/// Coefficient of the point class in sigma_{I_1} ... sigma_{I_s}; 0 when the
/// codimensions do not sum to r(n - r). Throws DimensionMismatch on mixed
/// (r, n).
std::uint64_t intersection_number(std::span<const SchubertIndex> indices);

/// Every s-tuple of r-subsets of [n] with intersection number exactly 1, in
/// lexicographic order of (I_1, ..., I_s).
std::vector<std::vector<SchubertIndex>> enumerate_point_tuples(int n, int s, int r);

/// All r-subsets of [n] in lexicographic order.
std::vector<SchubertIndex> all_indices(int n, int r);

/// All partitions in the rows x cols box, ordered by size then reverse-lex.
std::vector<BoxPartition> all_box_partitions(int rows, int cols);

}  // namespace eigencone
