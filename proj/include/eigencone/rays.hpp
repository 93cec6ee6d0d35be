#pragma once

// Extremal rays of Gamma_n(s): basic rays from modular intersection loci,
// the induction map from Gamma_r(s) x Gamma_{n-r}(s) onto the F_2 face of a
// facet, and the recursive enumeration of all extremal rays.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "eigencone/cone.hpp"

namespace eigencone {

struct BasicOrigin {
  FacetDescriptor facet;
  Type1Pair pair;
};

struct InducedOrigin {
  enum class Side { left, right };
  FacetDescriptor facet;
  Side side = Side::left;
  std::vector<DominantWeight> source;  // weight tuple of the smaller-cone ray
};

struct ImportedOrigin {};

using Provenance = std::variant<BasicOrigin, InducedOrigin, ImportedOrigin>;

/// A ray of the cone. `weights` is the primitive integral representative and
/// `direction` is exactly kappa(weights).
struct Ray {
  KappaTuple direction;
  std::vector<DominantWeight> weights;
  Provenance provenance = ImportedOrigin{};
};

/// Canonical ray through a nonzero dominant tuple. Throws DomainError for
/// zero or non-dominant input.
Ray make_ray(const KappaTuple& x, Provenance provenance = ImportedOrigin{});

/// Deduplication key: the concatenated primitive weight tuple.
std::vector<long long> ray_key(const KappaTuple& x);

/// A point of Gamma_r(s) x Gamma_{n-r}(s).
struct ProductPoint {
  KappaTuple left;   // s points of h_r
  KappaTuple right;  // s points of h_{n-r}
};

/// Throws DomainError unless both sides are members of their own cones.
void validate_product_point(const ProductPoint& p, std::uint64_t budget = kDefaultBudget);

/// Weights lambda_i = sum c_{i,b} omega_b with c_{i,b} the intersection number
/// of A with A_i replaced by A_i^{-,b}, over b in A_i, b+1 not in A_i.
/// Throws DomainError unless sum codim(A_i) = r(n-r) + 1.
std::vector<DominantWeight> divisor_weights(std::span<const SchubertIndex> sets);

/// kappa of divisor_weights; may be the zero tuple.
KappaTuple divisor_class(std::span<const SchubertIndex> sets);

/// Ray of the basic divisor for (f, j0, a0): A_{j0} = raise(I_{j0}, a0).
/// Throws DomainError if the pair is not a type-1 pair of f.
Ray basic_ray(const FacetDescriptor& f, Type1Pair pair);

/// y_i^(b) = x_i^(w_{I_i}^{-1}(b)) where x_i = (left_i, right_i).
/// Not dominant in general.
KappaTuple naive_induct(const FacetDescriptor& f, const ProductPoint& p);

struct CorrectionTerm {
  int component = 0;  // 1-based i
  int b = 0;
  Rational gap;       // y_i^(b) - y_i^(b-1)
  std::vector<SchubertIndex> divisor;  // (I_1, ..., I_i^{+,b}, ..., I_s)
  KappaTuple divisor_class;
};

struct InductionTrace {
  KappaTuple naive;
  std::vector<CorrectionTerm> corrections;
  KappaTuple result;
};

/// Induction with every intermediate term.
InductionTrace induct_traced(const FacetDescriptor& f, const ProductPoint& p);

/// naive_induct plus sum of gap * divisor_class over the type-1 pairs.
KappaTuple induct(const FacetDescriptor& f, const ProductPoint& p);

/// Section of induct on F_2: positional restriction along w_{I_i}, each side
/// recentered to trace zero. Throws DomainError unless z is on f and in F_2.
ProductPoint restrict_section(const FacetDescriptor& f, const KappaTuple& z);

/// x spans an extremal ray iff the tight facets and walls at x cut the
/// trace-zero space down to dimension one. Throws DomainError for zero or
/// non-member input.
bool is_extremal(const KappaTuple& x, std::uint64_t budget = kDefaultBudget);

/// Basic rays of f, followed by the inductions of (e, 0) for e a ray of
/// Gamma_r and (0, e) for e a ray of Gamma_{n-r}. Zero inductions dropped.
std::vector<Ray> facet_ray_candidates(const FacetDescriptor& f, std::span<const Ray> left_rays,
                                      std::span<const Ray> right_rays);

struct RayCatalog {
  std::vector<Ray> rays;      // extremal, deduplicated, sorted by key
  std::vector<Ray> rejected;  // deduplicated candidates that are not extremal
};

/// Every extremal ray of Gamma_n(s), computed recursively from the smaller
/// cones. Memoized per (n, s). Gamma_1 has no rays.
const RayCatalog& all_extremal_rays(int n, int s, std::uint64_t budget = kDefaultBudget);

/// Like all_extremal_rays, restricted to the candidates of one facet
/// (not memoized).
RayCatalog facet_extremal_rays(const FacetDescriptor& f, std::uint64_t budget = kDefaultBudget);

/// invariant_dimension(m * weights) == 1 for m = N0 * k, k = 1..max_scale,
/// where N0 = admissible_scale(weights) (1 whenever n divides the total size).
bool is_F_ray(const Ray& ray, int max_scale = 3);

}  // namespace eigencone
