#pragma once

#include <cstdint>
#include <vector>

#include "tropexp/expsum.hpp"

namespace tropexp {

/// Proper linear subspaces of R^q, each as a reduced echelon row basis, without repeats.
class SubspaceFamily {
 public:
  explicit SubspaceFamily(std::size_t ambient = 0) : ambient_(ambient) {}

  std::size_t ambient_dim() const noexcept { return ambient_; }
  const std::vector<std::vector<Vec>>& subspaces() const noexcept { return subspaces_; }
  bool empty() const noexcept { return subspaces_.empty(); }
  /// Adds span(basis) unless it is the whole space or already present.
  void add(const std::vector<Vec>& basis);
  bool contains_point(const Vector& v) const;

 private:
  std::size_t ambient_;
  std::vector<std::vector<Vec>> subspaces_;
};

/// The combinatorial model of a system: the group basis, the product of the
/// lattice skeleton fans in R^q, and the winding subspace L_G = s_G(R^n).
struct ModelSystem {
  GroupBasis group;
  TropicalFan fan;
  std::vector<Vector> winding_image;
};

ModelSystem model_system(const std::vector<ExpSum>& system, const ProductOptions& product = {},
                         const std::vector<Covector>& extra_generators = {});

/// The spans V_tau + L for every face tau of every cone of `fan` that fail to fill R^q.
SubspaceFamily nontransversal_loci(const TropicalFan& fan, const std::vector<Vector>& winding_image);

struct Chamber {
  Vector point;
  /// Indices into the model fan's cones met by point + L in their relative interior.
  std::vector<std::size_t> active;
};

/// Deterministic generic point for the seed and its active cones.
Chamber sample_chamber(const SubspaceFamily& family, const TropicalFan& fan, const std::vector<Vector>& winding_image,
                       std::uint64_t seed, int max_retries = 64);

/// Lattice {y : <y, mu_j> in 2 pi Z} stored by the basis of its quotient by 2 pi,
/// with the covering multiplicity of its cone.
struct ShiftedLattice {
  std::vector<Vector> basis_over_2pi;
  std::int64_t multiplicity = 1;
  /// The covectors mu_j; empty when the lattice was given by its basis only.
  std::vector<Covector> characters;
  friend bool operator==(const ShiftedLattice&, const ShiftedLattice&) = default;
};

/// One lattice per active cone: M_K = integer covectors vanishing on V_K,
/// mu_j = sum_i m_ji lambda_i, and the lattice-normalized cone weight as multiplicity.
std::vector<ShiftedLattice> zero_lattices(const ModelSystem& model, const Chamber& chamber);

/// Sum of multiplicity / |det basis|, times (2 pi)^-n.
ScaledDensity density_sum(const std::vector<ShiftedLattice>& lattices);

/// True iff the two bases generate the same lattice.
bool same_lattice(const std::vector<Vector>& a, const std::vector<Vector>& b);

}  // namespace tropexp
