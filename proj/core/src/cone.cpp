#include "tropexp/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>

#include "tropexp/error.hpp"

namespace tropexp {
namespace {

struct Generators {
  std::vector<Vec> lineality;  // reduced echelon rows
  std::vector<Vec> rays;       // canonical, sorted
};

using Bits = boost::dynamic_bitset<>;

// x -= c * y
void axpy(Vec& x, const Scalar& c, const Vec& y) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!y[i].is_zero()) x[i] -= c * y[i];
}

void canonicalize(std::size_t n, Generators& g) {
  if (!g.lineality.empty()) {
    const EchelonForm e = rref(Matrix::from_rows(g.lineality, n));
    g.lineality = e.reduced.row_list();
    for (auto& r : g.rays) {
      for (std::size_t i = 0; i < e.rank(); ++i) {
        const Scalar c = r[e.pivots[i]];
        axpy(r, c, g.lineality[i]);
      }
    }
  }
  std::vector<Vec> rays;
  for (auto& r : g.rays) {
    if (is_zero(r)) continue;
    normalize_direction(r);
    rays.push_back(std::move(r));
  }
  std::sort(rays.begin(), rays.end(), [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  g.rays = std::move(rays);
}

// Generators of {x in Q^n : <e,x> = 0 (e in eqs), <a,x> >= 0 (a in ineqs)}.
Generators double_description(std::size_t n, const std::vector<Vec>& eqs, const std::vector<Vec>& ineqs) {
  std::vector<Vec> lin;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Vec> rays;
  std::vector<Bits> tight;  // per ray, over processed inequalities
  std::size_t processed = 0;

  auto absorb_lineality = [&](const Vec& a, bool keep_as_ray) -> bool {
    for (std::size_t i = 0; i < lin.size(); ++i) {
      Scalar al = dot(a, lin[i]);
      if (al.is_zero()) continue;
      Vec l = std::move(lin[i]);
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(i));
      if (al.sign() < 0) {
        for (auto& x : l) x = -x;
        al = -al;
      }
      const Scalar inv = al.inverse();
      for (auto& other : lin) axpy(other, dot(a, other) * inv, l);
      for (auto& r : rays) axpy(r, dot(a, r) * inv, l);
      if (keep_as_ray) {
        for (auto& t : tight) t.push_back(true);
        normalize_direction(l);
        Bits bits(processed + 1, 0);
        bits.set();
        bits.reset(processed);
        rays.push_back(std::move(l));
        tight.push_back(std::move(bits));
      }
      return true;
    }
    return false;
  };

  for (const auto& e : eqs) {
    if (e.size() != n) throw PreconditionError("constraint dimension mismatch");
    absorb_lineality(e, false);
  }

  for (const auto& a : ineqs) {
    if (a.size() != n) throw PreconditionError("constraint dimension mismatch");
    if (absorb_lineality(a, true)) {
      ++processed;
      continue;
    }
    std::vector<Scalar> vals;
    vals.reserve(rays.size());
    bool any_negative = false;
    for (const auto& r : rays) {
      vals.push_back(dot(a, r));
      if (vals.back().sign() < 0) any_negative = true;
    }
    if (!any_negative) {
      for (std::size_t i = 0; i < rays.size(); ++i) tight[i].push_back(vals[i].is_zero());
      ++processed;
      continue;
    }
    std::vector<Vec> next_rays;
    std::vector<Bits> next_tight;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i].sign() >= 0) {
        next_rays.push_back(rays[i]);
        Bits b = tight[i];
        b.push_back(vals[i].is_zero());
        next_tight.push_back(std::move(b));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (vals[p].sign() <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (vals[q].sign() >= 0) continue;
        const Bits common = tight[p] & tight[q];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(tight[r])) adjacent = false;
        }
        if (!adjacent) continue;
        Vec combo(n);
        for (std::size_t j = 0; j < n; ++j) {
          Scalar v;
          if (!rays[q][j].is_zero()) v += vals[p] * rays[q][j];
          if (!rays[p][j].is_zero()) v -= vals[q] * rays[p][j];
          combo[j] = std::move(v);
        }
        normalize_direction(combo);
        Bits b = common;
        b.push_back(true);
        next_rays.push_back(std::move(combo));
        next_tight.push_back(std::move(b));
      }
    }
    rays = std::move(next_rays);
    tight = std::move(next_tight);
    ++processed;
  }

  Generators g{std::move(lin), std::move(rays)};
  canonicalize(n, g);
  return g;
}

std::vector<Vec> to_rows(const std::vector<Vector>& v) {
  std::vector<Vec> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.coords());
  return out;
}

std::vector<Vec> to_rows(const std::vector<Covector>& v) {
  std::vector<Vec> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.coords());
  return out;
}

}  // namespace

std::string key_of(const std::vector<Vec>& rows) {
  std::string k;
  for (const auto& r : rows) {
    k += '[';
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) k += ',';
      k += r[i].to_string();
    }
    k += ']';
  }
  return k;
}

Vec coordinates_in_echelon_basis(const std::vector<Vec>& span, const std::vector<std::size_t>& pivots,
                                 std::span<const Scalar> x) {
  Vec c(span.size());
  for (std::size_t i = 0; i < span.size(); ++i) c[i] = x[pivots[i]];
  return c;
}

void Cone::finish_from_vrep() {
  const Generators h = double_description(dim_, to_rows(lineality_), to_rows(rays_));
  equations_.clear();
  inequalities_.clear();
  for (const auto& e : h.lineality) equations_.emplace_back(e);
  for (const auto& a : h.rays) inequalities_.emplace_back(a);
  std::vector<Vec> gens = to_rows(lineality_);
  for (const auto& r : rays_) gens.push_back(r.coords());
  if (gens.empty()) {
    span_.clear();
    span_pivots_.clear();
  } else {
    EchelonForm e = rref(Matrix::from_rows(gens, dim_));
    span_ = e.reduced.row_list();
    span_pivots_ = std::move(e.pivots);
  }
  span_key_ = std::to_string(dim_) + ":" + key_of(span_);
}

Cone Cone::from_constraints(std::size_t dim, const std::vector<Covector>& equations,
                            const std::vector<Covector>& inequalities) {
  Cone c;
  c.dim_ = dim;
  const Generators g = double_description(dim, to_rows(equations), to_rows(inequalities));
  for (const auto& l : g.lineality) c.lineality_.emplace_back(l);
  for (const auto& r : g.rays) c.rays_.emplace_back(r);
  c.finish_from_vrep();
  return c;
}

Cone Cone::from_generators(std::size_t dim, const std::vector<Vector>& rays, const std::vector<Vector>& lineality) {
  for (const auto& r : rays)
    if (r.dim() != dim) throw PreconditionError("ray dimension mismatch");
  for (const auto& l : lineality)
    if (l.dim() != dim) throw PreconditionError("lineality dimension mismatch");
  const Generators h = double_description(dim, to_rows(lineality), to_rows(rays));
  Cone c;
  c.dim_ = dim;
  const Generators g = double_description(dim, h.lineality, h.rays);
  for (const auto& l : g.lineality) c.lineality_.emplace_back(l);
  for (const auto& r : g.rays) c.rays_.emplace_back(r);
  for (const auto& e : h.lineality) c.equations_.emplace_back(e);
  for (const auto& a : h.rays) c.inequalities_.emplace_back(a);
  std::vector<Vec> gens = g.lineality;
  gens.insert(gens.end(), g.rays.begin(), g.rays.end());
  if (!gens.empty()) {
    EchelonForm e = rref(Matrix::from_rows(gens, dim));
    c.span_ = e.reduced.row_list();
    c.span_pivots_ = std::move(e.pivots);
  }
  c.span_key_ = std::to_string(dim) + ":" + key_of(c.span_);
  return c;
}

Cone Cone::whole_space(std::size_t dim) { return from_constraints(dim, {}, {}); }

Cone Cone::origin(std::size_t dim) { return from_generators(dim, {}, {}); }

Cone Cone::subspace(std::size_t dim, const std::vector<Vector>& basis) { return from_generators(dim, {}, basis); }

std::vector<Vector> Cone::span_complement() const {
  std::vector<bool> pivot(dim_, false);
  for (auto p : span_pivots_) pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t j = 0; j < dim_; ++j)
    if (!pivot[j]) out.push_back(Vector::unit(dim_, j));
  return out;
}

std::string Cone::key() const { return std::to_string(dim_) + "L" + key_of(to_rows(lineality_)) + "R" + key_of(to_rows(rays_)); }

bool Cone::contains(const Vector& x) const {
  for (const auto& e : equations_)
    if (!pair(e, x).is_zero()) return false;
  for (const auto& a : inequalities_)
    if (pair(a, x).sign() < 0) return false;
  return true;
}

bool Cone::contains_in_relative_interior(const Vector& x) const {
  for (const auto& e : equations_)
    if (!pair(e, x).is_zero()) return false;
  for (const auto& a : inequalities_)
    if (pair(a, x).sign() <= 0) return false;
  return true;
}

Vector Cone::relative_interior_point() const {
  Vector p(dim_);
  for (const auto& r : rays_) p += r;
  return p;
}

Cone Cone::intersect(const Cone& other) const {
  if (dim_ != other.dim_) throw PreconditionError("intersecting cones in different spaces");
  std::vector<Covector> eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  std::vector<Covector> ineqs = inequalities_;
  ineqs.insert(ineqs.end(), other.inequalities_.begin(), other.inequalities_.end());
  return from_constraints(dim_, eqs, ineqs);
}

Cone Cone::preimage(const Matrix& s) const {
  if (s.rows() != dim_) throw PreconditionError("preimage: map target does not match cone");
  std::vector<Covector> eqs;
  std::vector<Covector> ineqs;
  for (const auto& e : equations_) eqs.emplace_back(s.apply_left(e.coords()));
  for (const auto& a : inequalities_) ineqs.emplace_back(s.apply_left(a.coords()));
  return from_constraints(s.cols(), eqs, ineqs);
}

Cone Cone::sum(const Cone& other) const {
  if (dim_ != other.dim_) throw PreconditionError("summing cones in different spaces");
  std::vector<Vector> rays = rays_;
  rays.insert(rays.end(), other.rays_.begin(), other.rays_.end());
  std::vector<Vector> lin = lineality_;
  lin.insert(lin.end(), other.lineality_.begin(), other.lineality_.end());
  return from_generators(dim_, rays, lin);
}

Cone Cone::negated() const {
  std::vector<Vector> rays;
  for (const auto& r : rays_) rays.push_back(-r);
  return from_generators(dim_, rays, lineality_);
}

std::vector<ConeFacet> Cone::facets() const {
  std::vector<ConeFacet> out;
  for (const auto& a : inequalities_) {
    std::vector<Vector> on;
    const Vector* inward = nullptr;
    for (const auto& r : rays_) {
      const Scalar v = pair(a, r);
      if (v.is_zero()) {
        on.push_back(r);
      } else if (inward == nullptr) {
        inward = &r;
      }
    }
    if (inward == nullptr) continue;
    out.push_back(ConeFacet{from_generators(dim_, on, lineality_), *inward});
  }
  return out;
}

std::vector<Cone> Cone::faces() const {
  std::vector<Cone> out{*this};
  std::map<std::string, bool> seen{{key(), true}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto& f : out[i].facets()) {
      std::string k = f.face.key();
      if (seen.emplace(std::move(k), true).second) out.push_back(std::move(f.face));
    }
  }
  return out;
}

}  // namespace tropexp
