#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropexp/cone.hpp"
#include "tropexp/fan.hpp"

namespace tropexp {

/// Affine halfspace {x : offset + <x, normal> >= 0} (or = 0 for equations) in a dual space.
struct Halfspace {
  Scalar offset;
  Vector normal;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Bounded convex polytope in a dual space, with vertices over the field.
/// Vertices are the extreme points in lexicographic order; the facet list is
/// irredundant relative to the affine hull, which is cut out by `equations()`.
class Polytope {
 public:
  Polytope() = default;

  std::size_t ambient_dim() const noexcept { return ambient_; }
  /// Dimension of the affine hull.
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Covector>& vertices() const noexcept { return vertices_; }
  const std::vector<Halfspace>& facets() const noexcept { return facets_; }
  const std::vector<Halfspace>& equations() const noexcept { return equations_; }
  bool is_full_dimensional() const noexcept { return dim_ == ambient_; }

  bool contains(const Covector& x) const;
  Polytope translated(const Covector& t) const;
  Polytope scaled(const Scalar& r) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
  }
  /// Canonical order: ambient dimension, then vertex count, then vertices lexicographically.
  friend bool operator<(const Polytope& a, const Polytope& b);

 private:
  friend Polytope convex_hull(const std::vector<Covector>& points);

  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
  std::vector<Covector> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equations_;
};

/// Throws PreconditionError on an empty list or inconsistent dimensions.
Polytope convex_hull(const std::vector<Covector>& points);
Polytope minkowski_sum(const Polytope& a, const Polytope& b);
/// Image under the adjoint s': U* -> V* of s: V -> U (f |-> f o s).
Polytope adjoint_image(const LinearMap& s, const Polytope& p);

/// Segment [0, v], the standard simplex and the unit cube, for tests and probes.
Polytope segment(const Covector& v);
Polytope standard_simplex(std::size_t n);
Polytope unit_cube(std::size_t n);

struct Face {
  std::size_t dim = 0;
  std::vector<std::size_t> vertices;  // indices into Polytope::vertices(), increasing
  friend bool operator==(const Face&, const Face&) = default;
};

/// All nonempty faces, including the polytope itself, grouped by dimension.
class FaceLattice {
 public:
  explicit FaceLattice(const Polytope& p);

  std::size_t top_dim() const noexcept { return by_dim_.size() - 1; }
  const std::vector<Face>& faces(std::size_t dim) const { return by_dim_.at(dim); }
  /// Faces of dimension dim - 1 contained in faces(dim)[index].
  const std::vector<std::size_t>& facets_of(std::size_t dim, std::size_t index) const {
    return below_.at(dim).at(index);
  }
  std::optional<std::size_t> find(const Face& f) const;
  std::size_t size() const;

 private:
  std::vector<std::vector<Face>> by_dim_;
  std::vector<std::vector<std::vector<std::size_t>>> below_;
};

/// Warnings produced by volume computations (e.g. lower-dimensional input).
using Diagnostics = std::vector<std::string>;

/// Lebesgue volume in the standard frame; 0 (with a diagnostic) for lower-dimensional input.
Scalar volume(const Polytope& p, Diagnostics* diagnostics = nullptr);

/// Mixed volume by polarization over all 2^n partial Minkowski sums,
/// normalized so that V(P, ..., P) = vol(P).
Scalar mixed_volume(const std::vector<Polytope>& polytopes);

/// Triangulation of a face by pulling from its lexicographically smallest
/// vertex, recursively over the faces not containing it. Simplices are lists
/// of vertex indices with the apex first.
std::vector<std::vector<std::size_t>> triangulate(const Polytope& p, const FaceLattice& lattice, std::size_t dim,
                                                  std::size_t index);

/// Sum over a triangulation of the wedge of edge covectors u_1 ^ ... ^ u_k,
/// with all simplices oriented alike; evaluates to +-k! vol_k on a frame of
/// the face's direction space.
ExteriorForm face_volume_form(const Polytope& p, const FaceLattice& lattice, std::size_t dim, std::size_t index);

/// Vectors whose maximum over p is attained on the whole face (closure of the
/// set where it is attained exactly there).
Cone dual_cone(const Polytope& p, const Face& face);

/// The fan of cones dual to the k-faces of p, each weighted by its face volume form
/// (sign chosen positive). Empty fan of degree k when k > dim p; unit fan when k = 0.
TropicalFan skeleton_fan(const Polytope& p, std::size_t k);

}  // namespace tropexp
