#pragma once

// The inequality description of the eigencone Gamma_n(s): intersection-number
// one Klyachko inequalities plus the Weyl chamber walls.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eigencone/schubert.hpp"
#include "eigencone/weights.hpp"

namespace eigencone {

/// Default cap on C(n, floor(n/2))^s, the candidate-tuple estimate.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// (r; I_1, ..., I_s) with sigma_{I_1} ... sigma_{I_s} = [pt] in Gr(r, n).
struct FacetDescriptor {
  int r = 0;
  std::vector<SchubertIndex> sets;

  int n() const { return sets.front().n(); }
  int s() const { return static_cast<int>(sets.size()); }
  std::string to_string() const;  // "r=2;I1=2,3;I2=2,4;I3=2,4"

  friend bool operator==(const FacetDescriptor&, const FacetDescriptor&) = default;
  friend auto operator<=>(const FacetDescriptor&, const FacetDescriptor&) = default;
};

/// Builds a descriptor and checks intersection number one; throws DomainError.
FacetDescriptor make_facet(int n, std::vector<std::vector<int>> sets);

/// x_i^(a) >= x_i^(a+1); component and a are 1-based.
struct WallPair {
  int component = 0;
  int a = 0;
  friend bool operator==(const WallPair&, const WallPair&) = default;
  friend auto operator<=>(const WallPair&, const WallPair&) = default;
};

/// (j0, a0): a0 in I_{j0}, a0 > 1, a0 - 1 not in I_{j0}. j0 is 1-based.
struct Type1Pair {
  int component = 0;
  int a0 = 0;
  friend bool operator==(const Type1Pair&, const Type1Pair&) = default;
  friend auto operator<=>(const Type1Pair&, const Type1Pair&) = default;
};

struct InequalitySystem {
  int n = 0;
  int s = 0;
  std::vector<FacetDescriptor> facets;
  std::vector<WallPair> walls;
};

/// C(n, floor(n/2))^s, saturating at UINT64_MAX.
std::uint64_t enumeration_estimate(int n, int s);
/// Throws BudgetExceeded when enumeration_estimate(n, s) > budget.
void check_budget(int n, int s, std::uint64_t budget);

/// sum_j sum_{a in I_j} x_j^(a).
Rational klyachko_value(const FacetDescriptor& f, const KappaTuple& x);

/// Every intersection-number-one facet of Gamma_n(s), r = 1..n-1, in
/// lexicographic order. Cached per (n, s); the reference stays valid.
const std::vector<FacetDescriptor>& enumerate_facets(int n, int s,
                                                     std::uint64_t budget = kDefaultBudget);

InequalitySystem inequality_system(int n, int s, std::uint64_t budget = kDefaultBudget);

/// Facets with klyachko_value > 0, with their values.
std::vector<std::pair<FacetDescriptor, Rational>> violated_facets(
    const KappaTuple& x, std::uint64_t budget = kDefaultBudget);

/// Membership in Gamma_n(s). Every component must be dominant; throws
/// DomainError naming the first offending coordinate otherwise. n = 1 is
/// the trivial cone {0}.
bool is_member(const KappaTuple& x, std::uint64_t budget = kDefaultBudget);

bool on_facet(const FacetDescriptor& f, const KappaTuple& x);

std::vector<Type1Pair> type1_pairs(const FacetDescriptor& f);

/// On the F_2 subface: x_i^(b) = x_i^(b-1) for every type-1 pair (i, b).
bool in_F2(const FacetDescriptor& f, const KappaTuple& x);

/// All (i, a) with x_i^(a) = x_i^(a+1).
std::vector<WallPair> wall_tight_set(const KappaTuple& x);

}  // namespace eigencone
