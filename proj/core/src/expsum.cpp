#include "tropexp/expsum.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "tropexp/error.hpp"

namespace tropexp {
namespace {

// Parenthesizes scalar text that would not survive as a factor.
std::string factor_text(const Scalar& s) {
  std::string t = s.to_string();
  if (t.find_first_of("+-", 1) != std::string::npos || t.find('/') != std::string::npos) return "(" + t + ")";
  return t;
}

void check_in_field(const Scalar& s, const FieldDescriptor& field) {
  if (s.radicand() != 0 && s.radicand() != field.radicand()) {
    throw FieldMismatchError(s.to_string() + " does not lie in " + field.to_string());
  }
}

std::string linear_text(const Covector& e) {
  std::string out;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    if (e[i].is_zero()) continue;
    std::string term;
    if (e[i] == Scalar(1)) {
      term = "z" + std::to_string(i + 1);
    } else if (e[i] == Scalar(-1)) {
      term = "-z" + std::to_string(i + 1);
    } else {
      const std::string f = factor_text(e[i]);
      term = f + "*z" + std::to_string(i + 1);
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace

std::string Complex::to_string() const {
  if (im.is_zero()) return re.to_string();
  const std::string imag = im == Scalar(1) ? "i" : im == Scalar(-1) ? "-i" : factor_text(im) + "*i";
  if (re.is_zero()) return imag;
  return "(" + re.to_string() + (imag[0] == '-' ? "" : "+") + imag + ")";
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  const Scalar r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = r;
  return *this;
}

Complex Complex::inverse() const {
  const Scalar norm = re * re + im * im;
  if (norm.is_zero()) throw PreconditionError("division by zero");
  return {re / norm, -im / norm};
}

ExpSum::ExpSum(std::size_t n, FieldDescriptor field, std::vector<Term> terms) : n_(n), field_(field) {
  std::map<Covector, Complex> merged;
  for (auto& t : terms) {
    if (t.exponent.dim() != n) throw PreconditionError("exponent of the wrong dimension");
    for (const auto& x : t.exponent.coords()) check_in_field(x, field);
    check_in_field(t.coeff.re, field);
    check_in_field(t.coeff.im, field);
    merged[t.exponent] += t.coeff;
  }
  for (auto& [e, c] : merged)
    if (!c.is_zero()) terms_.push_back({c, e});
}

std::vector<Covector> ExpSum::support() const {
  std::vector<Covector> out;
  for (const auto& t : terms_) out.push_back(t.exponent);
  return out;
}

std::string ExpSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string term;
    const std::string lin = linear_text(t.exponent);
    if (lin.empty()) {
      term = t.coeff.to_string();
    } else if (t.coeff == Complex{Scalar(1), Scalar(0)}) {
      term = "exp(" + lin + ")";
    } else if (t.coeff == Complex{Scalar(-1), Scalar(0)}) {
      term = "-exp(" + lin + ")";
    } else {
      const std::string c = t.coeff.im.is_zero() ? factor_text(t.coeff.re) : t.coeff.to_string();
      term = c + "*exp(" + lin + ")";
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Polytope newton_polytope(const ExpSum& f) {
  if (f.is_zero()) throw PreconditionError("Newton polytope of the zero sum");
  return convex_hull(f.support());
}

GroupBasis::GroupBasis(CovectorGroup group, std::size_t n) : n_(n), group_(std::move(group)) {
  std::vector<Vec> rows;
  for (const auto& b : group_.basis()) rows.push_back(b.coords());
  winding_ = LinearMap(Matrix::from_rows(rows, n));
}

IntVec GroupBasis::coordinates(const Covector& exponent) const {
  auto c = group_.coordinates(exponent);
  if (!c) throw PreconditionError("exponent outside the group");
  return *c;
}

bool GroupBasis::covers(const ExpSum& f) const {
  if (f.ambient_dim() != n_) return false;
  for (const auto& t : f.terms())
    if (!group_.coordinates(t.exponent)) return false;
  return true;
}

GroupBasis group_basis(const std::vector<ExpSum>& fs, const std::vector<Covector>& extra_generators) {
  if (fs.empty()) throw PreconditionError("group basis of an empty family");
  const std::size_t n = fs.front().ambient_dim();
  std::vector<Covector> gens;
  for (const auto& f : fs) {
    if (f.ambient_dim() != n) throw PreconditionError("exponential sums in different dimensions");
    for (const auto& t : f.terms()) gens.push_back(t.exponent);
  }
  for (const auto& g : extra_generators) {
    if (g.dim() != n) throw PreconditionError("extra generator of the wrong dimension");
    gens.push_back(g);
  }
  GroupBasis basis(hnf_basis(gens, n, field_of(gens).radicand()), n);
  if (!basis.winding().is_injective()) {
    const auto missing = basis.winding().kernel_basis();
    std::string dir;
    for (std::size_t i = 0; i < missing.front().dim(); ++i) dir += (i ? "," : "") + missing.front()[i].to_string();
    throw PreconditionError("exponents do not span the dual space: all of them vanish on the direction (" + dir + ")");
  }
  return basis;
}

std::string ScaledDensity::to_string() const {
  if (two_pi_power == 0) return value.to_string();
  return factor_text(value) + "*(2*pi)^" + std::to_string(two_pi_power);
}

double ScaledDensity::approximate() const { return value.to_double() * std::pow(2 * std::numbers::pi, two_pi_power); }

TropicalFan hypersurface_trop(const ExpSum& f, const TropOptions& options) {
  if (f.is_zero()) throw PreconditionError("tropicalization of the zero sum");
  const std::size_t n = f.ambient_dim();
  if (f.is_monomial()) return TropicalFan(n, 1);
  if (options.route == TropRoute::direct) return skeleton_fan(newton_polytope(f), 1);

  const GroupBasis g = options.group ? *options.group : group_basis({f});
  if (g.ambient_dim() != n || !g.covers(f)) throw PreconditionError("the group does not contain the exponents");
  std::vector<Covector> lattice_points;
  for (const auto& t : f.terms()) {
    const IntVec c = g.coordinates(t.exponent);
    Covector p(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) p[i] = Scalar(mpq_class(c[i]));
    lattice_points.push_back(std::move(p));
  }
  const TropicalFan model = skeleton_fan(convex_hull(lattice_points), 1);
  PullbackOptions po;
  po.product = options.product;
  po.check_balance = false;
  return pullback(g.winding(), model, po);
}

TropicalFan system_trop(const std::vector<ExpSum>& fs, const TropOptions& options, Diagnostics* diagnostics) {
  if (fs.empty()) throw PreconditionError("empty system");
  const std::size_t n = fs.front().ambient_dim();
  for (const auto& f : fs)
    if (f.ambient_dim() != n) throw PreconditionError("system mixes dimensions");
  if (fs.size() > n) {
    if (diagnostics != nullptr) {
      diagnostics->push_back(std::to_string(fs.size()) + " equations in dimension " + std::to_string(n) +
                             ": a generic shift has no solutions");
    }
    return TropicalFan(n, fs.size());
  }
  TropOptions opts = options;
  if (opts.route == TropRoute::model && !opts.group) opts.group = group_basis(fs);
  TropicalFan result = TropicalFan::whole_space(n);
  for (const auto& f : fs) {
    result = stable_product(result, hypersurface_trop(f, opts), opts.product);
    if (result.empty()) return TropicalFan(n, fs.size());
  }
  return result;
}

ScaledDensity intersection_index(const std::vector<std::vector<ExpSum>>& systems, const TropOptions& options) {
  if (systems.empty() || systems.front().empty()) throw PreconditionError("empty system");
  const std::size_t n = systems.front().front().ambient_dim();
  std::vector<ExpSum> all;
  for (const auto& s : systems) all.insert(all.end(), s.begin(), s.end());
  if (all.size() != n) {
    throw PreconditionError("total degree " + std::to_string(all.size()) + " differs from the dimension " +
                            std::to_string(n));
  }
  TropOptions opts = options;
  if (opts.route == TropRoute::model && !opts.group) opts.group = group_basis(all);
  TropicalFan product = TropicalFan::whole_space(n);
  for (const auto& s : systems) product = stable_product(product, system_trop(s, opts), opts.product);
  return {product.empty() ? Scalar(0) : zero_cone_value(product), -static_cast<int>(n)};
}

ScaledDensity weak_density(const std::vector<ExpSum>& system, const TropOptions& options) {
  return intersection_index({system}, options);
}

ExpSum realize_fan(const Polytope& p) {
  std::vector<ExpSum::Term> terms;
  for (const auto& v : p.vertices()) terms.push_back({{Scalar(1), Scalar(0)}, v});
  return ExpSum(p.ambient_dim(), field_of(p.vertices()), std::move(terms));
}

FieldDescriptor field_of(const std::vector<Covector>& points) {
  std::int64_t d = 0;
  for (const auto& p : points) {
    for (const auto& x : p.coords()) {
      if (x.radicand() == 0) continue;
      if (d != 0 && d != x.radicand()) throw FieldMismatchError("points from two different quadratic fields");
      d = x.radicand();
    }
  }
  return d == 0 ? FieldDescriptor::rationals() : FieldDescriptor::quadratic(d);
}

}  // namespace tropexp
