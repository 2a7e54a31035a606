#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

#include "tropexp/linalg.hpp"

namespace tropexp {

using IntVec = std::vector<mpz_class>;

/// Row lattice in Z^m given by a basis in Hermite normal form: echelon rows,
/// positive pivots, entries above each pivot reduced into [0, pivot).
class IntegerLattice {
 public:
  IntegerLattice() = default;
  /// Computes the HNF basis of the lattice spanned by `generators` (rows in Z^ambient).
  IntegerLattice(const std::vector<IntVec>& generators, std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntVec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Integer coordinates of x in the HNF basis, or nullopt if x is not in the lattice.
  std::optional<IntVec> coordinates(const IntVec& x) const;

  friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Z-basis of {x in Z^m : a x = 0} for every row a of `rows` (the saturated
/// integer kernel), as rows.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, std::size_t ambient);

/// A finitely generated additive subgroup of the covectors over Q or Q(sqrt d),
/// realized as a lattice in the rational coordinates (a-parts, then b-parts).
class CovectorGroup {
 public:
  CovectorGroup() = default;

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t radicand() const noexcept { return radicand_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  /// Z-basis of the group, in HNF order.
  const std::vector<Covector>& basis() const noexcept { return basis_; }
  const IntegerLattice& lattice() const noexcept { return lattice_; }
  const mpz_class& denominator() const noexcept { return denominator_; }

  /// Unique integer coordinates of f in the basis; nullopt if f is outside the group.
  std::optional<IntVec> coordinates(const Covector& f) const;

 private:
  friend CovectorGroup hnf_basis(std::span<const Covector>, std::size_t, std::int64_t);
  IntVec rational_coordinates_scaled(const Covector& f, bool* exact) const;

  std::size_t dim_ = 0;
  std::int64_t radicand_ = 0;
  mpz_class denominator_ = 1;
  IntegerLattice lattice_;
  std::vector<Covector> basis_;
};

/// Z-basis of the group generated by `generators` in the dual of an
/// n-dimensional space over Q (radicand 0) or Q(sqrt radicand).
CovectorGroup hnf_basis(std::span<const Covector> generators, std::size_t n, std::int64_t radicand);

}  // namespace tropexp
