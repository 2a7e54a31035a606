#include "tropexp/fan.hpp"

#include <map>
#include <random>

#include "tropexp/error.hpp"

namespace tropexp {
namespace {

// det(complement, span basis): the weight is positive when it agrees with this frame.
Scalar span_det(const Cone& cone, const std::vector<Vector>& complement) {
  std::vector<Vec> rows;
  for (const auto& c : complement) rows.push_back(c.coords());
  for (const auto& b : cone.span_basis()) rows.push_back(b);
  return det_rows(rows);
}

// Sign of the orientation (o_f, u) relative to the canonical orientation of `cone`.
int boundary_sign(const Cone& cone, const Cone& facet, const Vector& inward) {
  std::vector<Vec> rows;
  for (const auto& b : facet.span_basis())
    rows.push_back(coordinates_in_echelon_basis(cone.span_basis(), cone.span_pivots(), b));
  rows.push_back(coordinates_in_echelon_basis(cone.span_basis(), cone.span_pivots(), inward.coords()));
  return det_rows(rows).sign();
}

// Canonical hyperplane normal: first nonzero coordinate equal to +1.
Vec hyperplane_normal(const Covector& a) {
  Vec h = a.coords();
  for (const auto& x : h) {
    if (x.is_zero()) continue;
    const Scalar inv = x.inverse();
    for (auto& y : h)
      if (!y.is_zero()) y *= inv;
    break;
  }
  return h;
}

std::vector<Cone> split_by(const std::vector<Cone>& cells, const Vec& h) {
  std::vector<Cone> out;
  const Covector hc(h);
  for (const auto& cell : cells) {
    bool crosses = false;
    for (const auto& l : cell.lineality()) {
      if (!pair(hc, l).is_zero()) {
        crosses = true;
        break;
      }
    }
    if (!crosses) {
      bool pos = false;
      bool negs = false;
      for (const auto& r : cell.rays()) {
        const int s = pair(hc, r).sign();
        pos = pos || s > 0;
        negs = negs || s < 0;
      }
      crosses = pos && negs;
    }
    if (!crosses) {
      out.push_back(cell);
      continue;
    }
    std::vector<Covector> ineqs = cell.inequalities();
    ineqs.push_back(hc);
    out.push_back(Cone::from_constraints(cell.ambient_dim(), cell.equations(), ineqs));
    ineqs.back() = -hc;
    out.push_back(Cone::from_constraints(cell.ambient_dim(), cell.equations(), ineqs));
  }
  return out;
}

void check_same_space(const TropicalFan& a, const TropicalFan& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError(std::string(what) + ": fans live in different spaces");
}

}  // namespace

TropicalFan TropicalFan::whole_space(std::size_t ambient, const Scalar& weight) {
  TropicalFan f(ambient, 0);
  f.add(Cone::whole_space(ambient), ExteriorForm::constant(ambient, weight));
  return f;
}

TropicalFan TropicalFan::point(std::size_t ambient, const Scalar& value) {
  TropicalFan f(ambient, ambient);
  ExteriorForm w(ambient, ambient);
  w.set_coefficient((SubsetMask{1} << ambient) - 1, value);
  f.add(Cone::origin(ambient), std::move(w));
  return f;
}

void TropicalFan::add(Cone cone, ExteriorForm weight, bool keep_zero) {
  if (cone.ambient_dim() != ambient_ || weight.dim() != ambient_) {
    throw PreconditionError("cone or weight lives in the wrong space");
  }
  if (weight.degree() != degree_) throw PreconditionError("weight degree does not match the fan degree");
  if (static_cast<long>(cone.dim()) != pure_dim()) {
    throw PreconditionError("cone dimension " + std::to_string(cone.dim()) + " does not match pure dimension " +
                            std::to_string(pure_dim()));
  }
  if (weight.is_zero() && !keep_zero) return;
  cones_.push_back({std::move(cone), std::move(weight)});
}

TropicalFan TropicalFan::scaled(const Scalar& factor) const {
  TropicalFan out(ambient_, degree_);
  if (factor.is_zero()) return out;
  for (const auto& wc : cones_) out.add(wc.cone, factor * wc.weight);
  return out;
}

Scalar weight_scalar(const Cone& cone, const ExteriorForm& weight) {
  const std::vector<Vector> complement = cone.span_complement();
  if (complement.size() != weight.degree()) throw PreconditionError("weight degree does not match cone codimension");
  return weight.evaluate(complement) / span_det(cone, complement);
}

std::vector<RefinedCell> refine_cells(const std::vector<const std::vector<WeightedCone>*>& inputs,
                                      std::size_t ambient, std::size_t degree) {
  struct Entry {
    std::size_t source;
    const WeightedCone* wc;
  };
  std::map<std::string, std::vector<Entry>> groups;
  for (std::size_t s = 0; s < inputs.size(); ++s) {
    for (const auto& wc : *inputs[s]) {
      if (wc.cone.ambient_dim() != ambient || wc.weight.degree() != degree) {
        throw PreconditionError("refinement inputs have inconsistent shapes");
      }
      groups[wc.cone.span_key()].push_back({s, &wc});
    }
  }
  std::vector<RefinedCell> cells;
  for (const auto& [key, entries] : groups) {
    std::vector<Vec> hyperplanes;
    std::map<std::string, bool> seen_h;
    for (const auto& e : entries) {
      for (const auto& a : e.wc->cone.inequalities()) {
        Vec h = hyperplane_normal(a);
        if (seen_h.emplace(key_of({h}), true).second) hyperplanes.push_back(std::move(h));
      }
    }
    std::map<std::string, Cone> unique;
    for (const auto& e : entries) {
      std::vector<Cone> pieces{e.wc->cone};
      for (const auto& h : hyperplanes) pieces = split_by(pieces, h);
      for (auto& p : pieces) {
        std::string k = p.key();
        unique.emplace(std::move(k), std::move(p));
      }
    }
    for (auto& [k, cell] : unique) {
      const Vector p = cell.relative_interior_point();
      RefinedCell rc{cell, std::vector<ExteriorForm>(inputs.size(), ExteriorForm(ambient, degree))};
      for (const auto& e : entries) {
        if (e.wc->cone.contains(p)) rc.weights[e.source] += e.wc->weight;
      }
      cells.push_back(std::move(rc));
    }
  }
  return cells;
}

std::pair<TropicalFan, TropicalFan> refine_common(const TropicalFan& a, const TropicalFan& b) {
  check_same_space(a, b, "refine_common");
  if (a.degree() != b.degree()) throw PreconditionError("refine_common: fans of different degree");
  const auto cells = refine_cells({&a.cones(), &b.cones()}, a.ambient_dim(), a.degree());
  TropicalFan ra(a.ambient_dim(), a.degree());
  TropicalFan rb(b.ambient_dim(), b.degree());
  for (const auto& c : cells) {
    if (c.weights[0].is_zero() && c.weights[1].is_zero()) continue;
    ra.add(c.cone, c.weights[0], true);
    rb.add(c.cone, c.weights[1], true);
  }
  return {std::move(ra), std::move(rb)};
}

TropicalFan normalized(const TropicalFan& fan) {
  TropicalFan out(fan.ambient_dim(), fan.degree());
  if (fan.empty()) return out;
  for (auto& c : refine_cells({&fan.cones()}, fan.ambient_dim(), fan.degree())) {
    out.add(std::move(c.cone), std::move(c.weights[0]));
  }
  return out;
}

bool is_zero_class(const TropicalFan& fan) {
  if (fan.empty()) return true;
  for (const auto& c : refine_cells({&fan.cones()}, fan.ambient_dim(), fan.degree())) {
    if (!c.weights[0].is_zero()) return false;
  }
  return true;
}

bool equality_test(const TropicalFan& a, const TropicalFan& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  if (a.degree() != b.degree()) return is_zero_class(a) && is_zero_class(b);
  for (const auto& c : refine_cells({&a.cones(), &b.cones()}, a.ambient_dim(), a.degree())) {
    if (c.weights[0] != c.weights[1]) return false;
  }
  return true;
}

TropicalFan fan_sum(const TropicalFan& a, const TropicalFan& b) {
  check_same_space(a, b, "fan_sum");
  if (a.degree() != b.degree()) throw PreconditionError("fan_sum: fans of different degree");
  TropicalFan both(a.ambient_dim(), a.degree());
  for (const auto& wc : a.cones()) both.add(wc.cone, wc.weight);
  for (const auto& wc : b.cones()) both.add(wc.cone, wc.weight);
  return normalized(both);
}

TropicalFan fan_difference(const TropicalFan& a, const TropicalFan& b) { return fan_sum(a, b.scaled(Scalar(-1))); }

BalanceReport balance_check(const TropicalFan& fan) {
  BalanceReport report;
  const std::size_t n = fan.ambient_dim();
  std::vector<WeightedCone> boundary;
  for (const auto& wc : fan.cones()) {
    if (static_cast<long>(wc.cone.dim()) != fan.pure_dim() || wc.weight.degree() != fan.degree()) {
      report.violations.push_back({"shape", wc.cone.relative_interior_point(), "cone or weight has the wrong dimension"});
      continue;
    }
    if (wc.weight.degree() > 0) {
      for (const auto& b : wc.cone.span_basis()) {
        if (!wc.weight.interior(Vector(b)).is_zero()) {
          report.violations.push_back(
              {"kernel", wc.cone.relative_interior_point(), "weight does not vanish on the span of its cone"});
          break;
        }
      }
    }
    for (const auto& f : wc.cone.facets()) {
      const int sign = boundary_sign(wc.cone, f.face, f.inward);
      boundary.push_back({f.face, sign > 0 ? wc.weight : -wc.weight});
    }
  }
  if (!boundary.empty()) {
    for (const auto& c : refine_cells({&boundary}, n, fan.degree())) {
      if (!c.weights[0].is_zero()) {
        report.violations.push_back({"boundary", c.cone.relative_interior_point(),
                                     "weights do not cancel around a codimension-one cell"});
      }
    }
  }
  report.balanced = report.violations.empty();
  return report;
}

Vector displacement_vector(std::size_t ambient, std::uint64_t seed, int attempt) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt + 1)));
  std::uniform_int_distribution<long> coord(-997, 997);
  Vector v(ambient);
  for (std::size_t i = 0; i < ambient; ++i) v[i] = Scalar(coord(rng));
  return v;
}

TropicalFan stable_product(const TropicalFan& a, const TropicalFan& b, const ProductOptions& options) {
  check_same_space(a, b, "stable_product");
  const std::size_t n = a.ambient_dim();
  const std::size_t degree = a.degree() + b.degree();
  TropicalFan result(n, degree);
  if (degree > n || a.empty() || b.empty()) return result;
  const long target_dim = static_cast<long>(n) - static_cast<long>(degree);

  struct PairData {
    const WeightedCone* sa;
    const WeightedCone* sb;
    bool transversal;
    std::vector<Vec> joint_span;
  };
  std::vector<PairData> pairs;
  std::vector<Cone> negated_b;
  negated_b.reserve(b.cones().size());
  for (const auto& wb : b.cones()) negated_b.push_back(wb.cone.negated());
  for (const auto& wa : a.cones()) {
    for (const auto& wb : b.cones()) {
      std::vector<Vec> rows = wa.cone.span_basis();
      rows.insert(rows.end(), wb.cone.span_basis().begin(), wb.cone.span_basis().end());
      const bool transversal = rank_of_rows(rows, n) == n;
      pairs.push_back({&wa, &wb, transversal, transversal ? std::vector<Vec>{} : row_space_basis(rows, n)});
    }
  }
  // Minkowski differences of transversal pairs are displacement independent.
  std::vector<Cone> differences(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!pairs[i].transversal) continue;
    const std::size_t jb = static_cast<std::size_t>(pairs[i].sb - b.cones().data());
    differences[i] = pairs[i].sa->cone.sum(negated_b[jb]);
  }

  for (int attempt = 0; attempt < options.max_retries; ++attempt) {
    const Vector v = displacement_vector(n, options.seed, attempt);
    bool generic = true;
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < pairs.size() && generic; ++i) {
      if (!pairs[i].transversal) {
        if (in_row_span(pairs[i].joint_span, v.coords(), n)) generic = false;
        continue;
      }
      bool inside = true;
      for (const auto& h : differences[i].inequalities()) {
        const int s = pair(h, v).sign();
        if (s == 0) {
          generic = false;
          break;
        }
        if (s < 0) inside = false;
      }
      if (generic && inside) hits.push_back(i);
    }
    if (!generic) continue;
    for (auto i : hits) {
      const auto& wa = *pairs[i].sa;
      const auto& wb = *pairs[i].sb;
      Cone meet = wa.cone.intersect(wb.cone);
      if (static_cast<long>(meet.dim()) != target_dim) continue;
      ExteriorForm w = wedge(wa.weight, wb.weight);
      const int want = weight_scalar(wa.cone, wa.weight).sign() * weight_scalar(wb.cone, wb.weight).sign();
      if (weight_scalar(meet, w).sign() != want) w = -w;
      result.add(std::move(meet), std::move(w));
    }
    return normalized(result);
  }
  throw GenericityError("no generic displacement found after " + std::to_string(options.max_retries) + " attempts");
}

Scalar zero_cone_value(const TropicalFan& fan) {
  if (fan.degree() != fan.ambient_dim()) throw PreconditionError("zero-cone value needs a fan of full degree");
  Scalar total;
  const SubsetMask all = (SubsetMask{1} << fan.ambient_dim()) - 1;
  for (const auto& wc : fan.cones()) total += wc.weight.coefficient(all);
  return total;
}

namespace {

TropicalFan pullback_surjective(const Matrix& s, const TropicalFan& fan) {
  TropicalFan out(s.cols(), fan.degree());
  for (const auto& wc : fan.cones()) {
    Cone pre = wc.cone.preimage(s);
    ExteriorForm w = wc.weight.pullback(s);
    if (w.is_zero()) continue;
    if (weight_scalar(pre, w).sign() != weight_scalar(wc.cone, wc.weight).sign()) w = -w;
    out.add(std::move(pre), std::move(w));
  }
  return out;
}

TropicalFan pullback_injective(const Matrix& s, const TropicalFan& fan, const PullbackOptions& options) {
  const std::size_t m = s.rows();
  const std::size_t n = s.cols();
  std::vector<Vector> image;
  for (std::size_t j = 0; j < n; ++j) image.emplace_back(s.col(j));
  const Cone e = Cone::subspace(m, image);
  ExteriorForm t = ExteriorForm::wedge_of(e.equations(), m);
  if (weight_scalar(e, t).sign() < 0) t = -t;
  if (options.auxiliary_scale.is_zero()) throw PreconditionError("pullback: zero auxiliary weight");
  t *= options.auxiliary_scale;
  const int t_sign = options.auxiliary_scale.sign();
  TropicalFan image_fan(m, m - n);
  image_fan.add(e, t);

  const TropicalFan product = stable_product(fan, image_fan, options.product);
  TropicalFan out(n, fan.degree());
  if (fan.degree() > n) return out;
  const std::vector<Vector> complement = e.span_complement();
  const Scalar t_value = t.evaluate(complement);
  const auto& masks = subsets_of_size(n, fan.degree());
  for (const auto& wc : product.cones()) {
    ExteriorForm w(n, fan.degree());
    for (const auto mask : masks) {
      std::vector<Vector> args = complement;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (SubsetMask{1} << j)) args.push_back(image[j]);
      w.set_coefficient(mask, wc.weight.evaluate(args) / t_value);
    }
    if (w.is_zero()) continue;
    Cone pre = wc.cone.preimage(s);
    if (weight_scalar(pre, w).sign() != t_sign * weight_scalar(wc.cone, wc.weight).sign()) w = -w;
    out.add(std::move(pre), std::move(w));
  }
  return out;
}

}  // namespace

TropicalFan pullback(const LinearMap& s, const TropicalFan& fan, const PullbackOptions& options) {
  if (s.target_dim() != fan.ambient_dim()) throw PreconditionError("pullback: map target does not match the fan");
  if (s.rank() == 0) throw PreconditionError("pullback along the zero map");
  if (options.check_balance) {
    const BalanceReport report = balance_check(fan);
    if (!report.balanced) throw PreconditionError("pullback of an unbalanced fan: " + report.violations[0].detail);
  }
  if (s.is_surjective()) return normalized(pullback_surjective(s.matrix(), fan));
  if (s.is_injective()) return normalized(pullback_injective(s.matrix(), fan, options));
  // s = B * R with B the pivot columns (injective) and R the reduced echelon rows (surjective).
  const EchelonForm e = rref(s.matrix());
  Matrix b(s.target_dim(), e.rank());
  for (std::size_t j = 0; j < e.rank(); ++j)
    for (std::size_t i = 0; i < s.target_dim(); ++i) b(i, j) = s.matrix()(i, e.pivots[j]);
  const TropicalFan middle = pullback_injective(b, fan, options);
  return normalized(pullback_surjective(e.reduced, middle));
}

}  // namespace tropexp
