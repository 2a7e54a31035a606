#pragma once

#include <string>
#include <vector>

#include "tropexp/linalg.hpp"

namespace tropexp {

struct ConeFacet;

/// Polyhedral cone in an N-dimensional space, kept in double description:
///
///   {x : <e, x> = 0 for e in equations, <a, x> >= 0 for a in inequalities}
///     = span(lineality) + cone(rays).
///
/// Both descriptions are irredundant and canonical (reduced echelon lineality
/// and equations, rays and facet normals reduced modulo them, scaled so the
/// first nonzero coordinate is +-1, sorted), so structural equality is
/// geometric equality.
class Cone {
 public:
  Cone() = default;

  static Cone from_constraints(std::size_t dim, const std::vector<Covector>& equations,
                               const std::vector<Covector>& inequalities);
  static Cone from_generators(std::size_t dim, const std::vector<Vector>& rays,
                              const std::vector<Vector>& lineality = {});
  static Cone whole_space(std::size_t dim);
  static Cone origin(std::size_t dim);
  static Cone subspace(std::size_t dim, const std::vector<Vector>& basis);

  std::size_t ambient_dim() const noexcept { return dim_; }
  /// Dimension of the linear span.
  std::size_t dim() const noexcept { return span_.size(); }
  const std::vector<Vector>& rays() const noexcept { return rays_; }
  const std::vector<Vector>& lineality() const noexcept { return lineality_; }
  const std::vector<Covector>& equations() const noexcept { return equations_; }
  const std::vector<Covector>& inequalities() const noexcept { return inequalities_; }

  /// Reduced echelon basis of the span V_K, which is also the canonical
  /// orientation of the cone.
  const std::vector<Vec>& span_basis() const noexcept { return span_; }
  /// Pivot columns of span_basis(); the remaining unit vectors complete it to a basis.
  const std::vector<std::size_t>& span_pivots() const noexcept { return span_pivots_; }
  /// Unit vectors e_j for the non-pivot columns, in increasing order.
  std::vector<Vector> span_complement() const;
  /// Stable textual key of the span (equal keys iff equal spans).
  const std::string& span_key() const noexcept { return span_key_; }
  /// Stable textual key of the cone itself.
  std::string key() const;

  bool is_linear_subspace() const noexcept { return rays_.empty(); }
  bool contains(const Vector& x) const;
  /// Strictly inside relative to the span: all facet inequalities strict.
  bool contains_in_relative_interior(const Vector& x) const;
  Vector relative_interior_point() const;

  Cone intersect(const Cone& other) const;
  /// Cone {x : s x in this} for s given as target x source matrix (target = ambient of this).
  Cone preimage(const Matrix& s) const;
  /// this + other (Minkowski sum of cones).
  Cone sum(const Cone& other) const;
  Cone negated() const;

  /// Facets (faces of dimension dim() - 1), each paired with one ray of this
  /// cone that is not in the facet.
  std::vector<ConeFacet> facets() const;
  /// All nonempty faces, including the cone itself and the lineality space.
  std::vector<Cone> faces() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.dim_ == b.dim_ && a.lineality_ == b.lineality_ && a.rays_ == b.rays_;
  }

 private:
  void finish_from_vrep();

  std::size_t dim_ = 0;
  std::vector<Vector> lineality_;
  std::vector<Vector> rays_;
  std::vector<Covector> equations_;
  std::vector<Covector> inequalities_;
  std::vector<Vec> span_;
  std::vector<std::size_t> span_pivots_;
  std::string span_key_;
};

struct ConeFacet {
  Cone face;
  Vector inward;
};

/// Coordinates of x in the reduced echelon basis `span` (x must lie in its span).
Vec coordinates_in_echelon_basis(const std::vector<Vec>& span, const std::vector<std::size_t>& pivots,
                                 std::span<const Scalar> x);

std::string key_of(const std::vector<Vec>& rows);

}  // namespace tropexp
