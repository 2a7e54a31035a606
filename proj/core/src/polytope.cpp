#include "tropexp/polytope.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>

#include "tropexp/error.hpp"

namespace tropexp {
namespace {

using Bits = boost::dynamic_bitset<>;

Vector homogenize(const Covector& x) {
  Vector h(x.dim() + 1);
  h[0] = 1;
  for (std::size_t i = 0; i < x.dim(); ++i) h[i + 1] = x[i];
  return h;
}

Halfspace dehomogenize(const Covector& a) {
  Halfspace h{a[0], Vector(a.dim() - 1)};
  for (std::size_t i = 1; i < a.dim(); ++i) h.normal[i - 1] = a[i];
  return h;
}

Scalar evaluate(const Halfspace& h, const Covector& x) { return h.offset + dot(x.coords(), h.normal.coords()); }

Scalar factorial(std::size_t n) {
  Scalar f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= Scalar(static_cast<long>(i));
  return f;
}

std::size_t affine_dim(const std::vector<Covector>& vertices, const std::vector<std::size_t>& subset) {
  std::vector<Vec> rows;
  for (auto i : subset) rows.push_back(homogenize(vertices[i]).coords());
  return rank_of_rows(rows, vertices.front().dim() + 1) - 1;
}

}  // namespace

Polytope convex_hull(const std::vector<Covector>& points) {
  if (points.empty()) throw PreconditionError("convex hull of an empty point set");
  const std::size_t n = points.front().dim();
  std::vector<Vector> rays;
  for (const auto& p : points) {
    if (p.dim() != n) throw PreconditionError("convex hull: points of different dimensions");
    rays.push_back(homogenize(p));
  }
  const Cone cone = Cone::from_generators(n + 1, rays);
  Polytope out;
  out.ambient_ = n;
  out.dim_ = cone.dim() - 1;
  for (const auto& r : cone.rays()) {
    Covector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = r[i + 1];
    out.vertices_.push_back(std::move(v));
  }
  for (const auto& e : cone.equations()) out.equations_.push_back(dehomogenize(e));
  for (const auto& a : cone.inequalities()) {
    Halfspace h = dehomogenize(a);
    const bool supports = std::any_of(out.vertices_.begin(), out.vertices_.end(),
                                      [&](const Covector& v) { return evaluate(h, v).is_zero(); });
    if (supports) out.facets_.push_back(std::move(h));
  }
  return out;
}

bool Polytope::contains(const Covector& x) const {
  if (x.dim() != ambient_) return false;
  for (const auto& e : equations_)
    if (!evaluate(e, x).is_zero()) return false;
  for (const auto& f : facets_)
    if (evaluate(f, x).sign() < 0) return false;
  return true;
}

Polytope Polytope::translated(const Covector& t) const {
  std::vector<Covector> pts;
  for (const auto& v : vertices_) pts.push_back(v + t);
  return convex_hull(pts);
}

Polytope Polytope::scaled(const Scalar& r) const {
  std::vector<Covector> pts;
  for (const auto& v : vertices_) pts.push_back(r * v);
  return convex_hull(pts);
}

bool operator<(const Polytope& a, const Polytope& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
  if (a.vertices_.size() != b.vertices_.size()) return a.vertices_.size() < b.vertices_.size();
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const int c = lex_compare(a.vertices_[i].coords(), b.vertices_[i].coords());
    if (c != 0) return c < 0;
  }
  return false;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("Minkowski sum of polytopes in different spaces");
  std::vector<Covector> pts;
  for (const auto& x : a.vertices())
    for (const auto& y : b.vertices()) pts.push_back(x + y);
  return convex_hull(pts);
}

Polytope adjoint_image(const LinearMap& s, const Polytope& p) {
  if (s.target_dim() != p.ambient_dim()) throw PreconditionError("adjoint image: polytope lives in the wrong space");
  std::vector<Covector> pts;
  for (const auto& v : p.vertices()) pts.push_back(s.adjoint(v));
  return convex_hull(pts);
}

Polytope segment(const Covector& v) { return convex_hull({Covector(v.dim()), v}); }

Polytope standard_simplex(std::size_t n) {
  std::vector<Covector> pts{Covector(n)};
  for (std::size_t i = 0; i < n; ++i) pts.push_back(Covector::unit(n, i));
  return convex_hull(pts);
}

Polytope unit_cube(std::size_t n) {
  std::vector<Covector> pts;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    Covector c(n);
    for (std::size_t i = 0; i < n; ++i)
      if (m & (std::size_t{1} << i)) c[i] = 1;
    pts.push_back(std::move(c));
  }
  return convex_hull(pts);
}

FaceLattice::FaceLattice(const Polytope& p) {
  const auto& verts = p.vertices();
  const std::size_t nv = verts.size();
  std::vector<Bits> facet_sets;
  for (const auto& f : p.facets()) {
    Bits b(nv);
    for (std::size_t i = 0; i < nv; ++i) b[i] = evaluate(f, verts[i]).is_zero();
    facet_sets.push_back(std::move(b));
  }
  Bits all(nv);
  all.set();
  std::vector<Bits> faces{all};
  std::map<Bits, bool> seen{{all, true}};
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (const auto& f : facet_sets) {
      Bits meet = faces[i] & f;
      if (meet.none() || meet == faces[i]) continue;
      if (seen.emplace(meet, true).second) faces.push_back(std::move(meet));
    }
  }
  by_dim_.assign(p.dim() + 1, {});
  for (const auto& b : faces) {
    Face face;
    for (std::size_t i = 0; i < nv; ++i)
      if (b[i]) face.vertices.push_back(i);
    face.dim = affine_dim(verts, face.vertices);
    by_dim_[face.dim].push_back(std::move(face));
  }
  for (auto& level : by_dim_) {
    std::sort(level.begin(), level.end(), [](const Face& a, const Face& b) { return a.vertices < b.vertices; });
  }
  below_.assign(by_dim_.size(), {});
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    below_[d].assign(by_dim_[d].size(), {});
    if (d == 0) continue;
    for (std::size_t i = 0; i < by_dim_[d].size(); ++i) {
      const auto& big = by_dim_[d][i].vertices;
      for (std::size_t j = 0; j < by_dim_[d - 1].size(); ++j) {
        const auto& small = by_dim_[d - 1][j].vertices;
        if (std::includes(big.begin(), big.end(), small.begin(), small.end())) below_[d][i].push_back(j);
      }
    }
  }
}

std::optional<std::size_t> FaceLattice::find(const Face& f) const {
  if (f.dim >= by_dim_.size()) return std::nullopt;
  const auto& level = by_dim_[f.dim];
  for (std::size_t i = 0; i < level.size(); ++i)
    if (level[i].vertices == f.vertices) return i;
  return std::nullopt;
}

std::size_t FaceLattice::size() const {
  std::size_t total = 0;
  for (const auto& level : by_dim_) total += level.size();
  return total;
}

std::vector<std::vector<std::size_t>> triangulate(const Polytope& p, const FaceLattice& lattice, std::size_t dim,
                                                  std::size_t index) {
  const Face& face = lattice.faces(dim).at(index);
  if (dim == 0) return {{face.vertices.front()}};
  const std::size_t apex = face.vertices.front();
  std::vector<std::vector<std::size_t>> out;
  for (auto g : lattice.facets_of(dim, index)) {
    const auto& gv = lattice.faces(dim - 1)[g].vertices;
    if (std::binary_search(gv.begin(), gv.end(), apex)) continue;
    for (auto& s : triangulate(p, lattice, dim - 1, g)) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

ExteriorForm face_volume_form(const Polytope& p, const FaceLattice& lattice, std::size_t dim, std::size_t index) {
  const std::size_t n = p.ambient_dim();
  if (dim == 0) return ExteriorForm::constant(n, Scalar(1));
  const auto& verts = p.vertices();
  ExteriorForm total(n, dim);
  std::size_t ref = 0;
  int ref_sign = 0;
  for (const auto& s : triangulate(p, lattice, dim, index)) {
    std::vector<Covector> edges;
    for (std::size_t i = 1; i < s.size(); ++i) edges.push_back(verts[s[i]] - verts[s[0]]);
    ExteriorForm w = ExteriorForm::wedge_of(edges, n);
    if (ref_sign == 0) {
      const auto& c = w.coefficients();
      ref = static_cast<std::size_t>(std::find_if(c.begin(), c.end(), [](const Scalar& x) { return !x.is_zero(); }) -
                                     c.begin());
      ref_sign = c[ref].sign();
      total += w;
    } else if (w.coefficients()[ref].sign() == ref_sign) {
      total += w;
    } else {
      total -= w;
    }
  }
  return total;
}

Scalar volume(const Polytope& p, Diagnostics* diagnostics) {
  if (!p.is_full_dimensional()) {
    if (diagnostics != nullptr) {
      diagnostics->push_back("volume of a " + std::to_string(p.dim()) + "-dimensional polytope in dimension " +
                             std::to_string(p.ambient_dim()) + " is 0");
    }
    return Scalar(0);
  }
  const std::size_t n = p.ambient_dim();
  if (n == 0) return Scalar(1);
  const FaceLattice lattice(p);
  const ExteriorForm w = face_volume_form(p, lattice, n, 0);
  return w.coefficient((SubsetMask{1} << n) - 1).abs() / factorial(n);
}

Scalar mixed_volume(const std::vector<Polytope>& polytopes) {
  const std::size_t n = polytopes.size();
  for (const auto& p : polytopes) {
    if (p.ambient_dim() != n) throw PreconditionError("mixed volume needs n polytopes in dimension n");
  }
  if (n == 0) return Scalar(1);
  Scalar total;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::optional<Polytope> sum;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++count;
      sum = sum ? minkowski_sum(*sum, polytopes[i]) : polytopes[i];
    }
    const Scalar v = volume(*sum);
    if ((n - count) % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  return total / factorial(n);
}

Cone dual_cone(const Polytope& p, const Face& face) {
  const auto& verts = p.vertices();
  if (face.vertices.empty()) throw PreconditionError("dual cone of the empty face");
  for (auto i : face.vertices)
    if (i >= verts.size()) throw PreconditionError("face refers to a missing vertex");
  const Covector& base = verts[face.vertices.front()];
  std::vector<Covector> eqs;
  for (std::size_t j = 1; j < face.vertices.size(); ++j) eqs.push_back(verts[face.vertices[j]] - base);
  std::vector<Covector> ineqs;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!std::binary_search(face.vertices.begin(), face.vertices.end(), i)) ineqs.push_back(base - verts[i]);
  }
  Cone cone = Cone::from_constraints(p.ambient_dim(), eqs, ineqs);
  // The face is genuine iff a relative-interior functional is maximized exactly on it.
  const Vector r = cone.relative_interior_point();
  Scalar best = pair(base, r);
  std::vector<std::size_t> argmax;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Scalar v = pair(verts[i], r);
    if (v > best) throw PreconditionError("not a face of the polytope");
    if (v == best) argmax.push_back(i);
  }
  if (argmax != face.vertices) throw PreconditionError("not a face of the polytope");
  return cone;
}

TropicalFan skeleton_fan(const Polytope& p, std::size_t k) {
  const std::size_t n = p.ambient_dim();
  if (k == 0) return TropicalFan::whole_space(n);
  TropicalFan fan(n, k);
  if (k > p.dim()) return fan;
  const FaceLattice lattice(p);
  const auto& faces = lattice.faces(k);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    Cone cone = dual_cone(p, faces[i]);
    ExteriorForm w = face_volume_form(p, lattice, k, i);
    if (weight_scalar(cone, w).sign() < 0) w = -w;
    fan.add(std::move(cone), std::move(w));
  }
  return fan;
}

}  // namespace tropexp
