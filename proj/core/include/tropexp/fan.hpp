#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tropexp/cone.hpp"
#include "tropexp/exterior.hpp"

namespace tropexp {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024ULL;

/// A cone together with its weight: an alternating form of degree
/// ambient - dim(cone), expressed relative to the cone's canonical
/// orientation (Cone::span_basis()).
struct WeightedCone {
  Cone cone;
  ExteriorForm weight;
};

/// Weighted fan of pure dimension ambient - degree. The cone list is a formal
/// sum: cones may overlap and are compared only up to common refinement.
/// An empty list is the zero class of its degree.
class TropicalFan {
 public:
  TropicalFan() = default;
  TropicalFan(std::size_t ambient, std::size_t degree) : ambient_(ambient), degree_(degree) {}

  /// The whole space as a single cone of weight `weight` (the unit of the ring when weight = 1).
  static TropicalFan whole_space(std::size_t ambient, const Scalar& weight = Scalar(1));
  /// The zero cone carrying `value` * e1* ^ ... ^ eN*.
  static TropicalFan point(std::size_t ambient, const Scalar& value);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  /// Codimension of the cones.
  std::size_t degree() const noexcept { return degree_; }
  /// Dimension of the cones; negative for zero classes of excess degree.
  long pure_dim() const noexcept { return static_cast<long>(ambient_) - static_cast<long>(degree_); }
  const std::vector<WeightedCone>& cones() const noexcept { return cones_; }
  bool empty() const noexcept { return cones_.empty(); }

  /// Appends a weighted cone; checks dimensions and degree. Zero weights are
  /// dropped unless keep_zero is set.
  void add(Cone cone, ExteriorForm weight, bool keep_zero = false);
  TropicalFan scaled(const Scalar& factor) const;

 private:
  std::size_t ambient_ = 0;
  std::size_t degree_ = 0;
  std::vector<WeightedCone> cones_;
};

/// Numeric value of a weight: W = lambda * det(., o), where o is the canonical
/// span basis. Its sign is the sign of the weight.
Scalar weight_scalar(const Cone& cone, const ExteriorForm& weight);

struct BalanceViolation {
  std::string kind;  // "shape", "kernel" or "boundary"
  Vector point;      // witness point (a relative-interior point of the offending cell)
  std::string detail;
};

struct BalanceReport {
  bool balanced = true;
  std::vector<BalanceViolation> violations;
};

/// Kernel condition on every cone plus vanishing of the boundary chain on the
/// common refinement of all codimension-one faces.
BalanceReport balance_check(const TropicalFan& fan);

/// A cell of a common refinement with the summed weight of each input fan on it.
struct RefinedCell {
  Cone cone;
  std::vector<ExteriorForm> weights;
};

/// Common refinement of several weighted cone lists of equal cone dimension
/// and weight degree. Each cell lies in exactly one cone span and is not cut by
/// any facet hyperplane of any input cone with that span.
std::vector<RefinedCell> refine_cells(const std::vector<const std::vector<WeightedCone>*>& inputs,
                                      std::size_t ambient, std::size_t degree);

/// Both fans re-expressed on their common refinement; cells absent from one
/// fan carry a zero weight there.
std::pair<TropicalFan, TropicalFan> refine_common(const TropicalFan& a, const TropicalFan& b);

/// Refines, merges weights cell by cell and drops zero cells.
TropicalFan normalized(const TropicalFan& fan);

/// True iff the fan represents the zero class.
bool is_zero_class(const TropicalFan& fan);

/// Equality of tropical varieties: equal weights on a common refinement.
/// Fans of different degree are equal only when both are zero.
bool equality_test(const TropicalFan& a, const TropicalFan& b);

TropicalFan fan_sum(const TropicalFan& a, const TropicalFan& b);
TropicalFan fan_difference(const TropicalFan& a, const TropicalFan& b);

struct ProductOptions {
  std::uint64_t seed = kDefaultSeed;
  int max_retries = 24;
};

/// Deterministic integer displacement vector for a given seed and attempt.
Vector displacement_vector(std::size_t ambient, std::uint64_t seed, int attempt);

/// Stable intersection by the fan displacement rule; result normalized.
/// Throws GenericityError when no certified generic displacement is found.
TropicalFan stable_product(const TropicalFan& a, const TropicalFan& b, const ProductOptions& options = {});

/// Evaluation of the zero-cone weight on the standard frame (degree must equal ambient).
Scalar zero_cone_value(const TropicalFan& fan);

struct PullbackOptions {
  ProductOptions product;
  bool check_balance = true;
  /// The image subspace of an injective map is carried with weight
  /// auxiliary_scale * (positive form); the result does not depend on it.
  Scalar auxiliary_scale = Scalar(1);
};

/// Pull-back of a fan on U along s: V -> U (surjective, injective or composite).
/// Weight positivity is preserved, which fixes the kernel orientation.
TropicalFan pullback(const LinearMap& s, const TropicalFan& fan, const PullbackOptions& options = {});

}  // namespace tropexp
