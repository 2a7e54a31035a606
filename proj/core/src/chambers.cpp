#include "tropexp/chambers.hpp"

#include <algorithm>
#include <random>

#include "tropexp/error.hpp"

namespace tropexp {
namespace {

Matrix columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

std::vector<Vec> to_rows(const std::vector<Vector>& vs) {
  std::vector<Vec> out;
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

// Rational row scaled to a primitive integer row.
IntVec integer_row(const Vec& r) {
  mpz_class den = 1;
  for (const auto& x : r) {
    if (!x.is_rational()) throw PreconditionError("model cone with irrational span");
    den = lcm(den, x.rational_part().get_den());
  }
  IntVec out;
  for (const auto& x : r) out.push_back(mpz_class(x.rational_part() * den));
  return out;
}

}  // namespace

void SubspaceFamily::add(const std::vector<Vec>& basis) {
  std::vector<Vec> canon = row_space_basis(basis, ambient_);
  if (canon.size() >= ambient_) return;
  if (std::find(subspaces_.begin(), subspaces_.end(), canon) == subspaces_.end()) subspaces_.push_back(std::move(canon));
}

bool SubspaceFamily::contains_point(const Vector& v) const {
  return std::any_of(subspaces_.begin(), subspaces_.end(),
                     [&](const std::vector<Vec>& s) { return in_row_span(s, v.coords(), ambient_); });
}

ModelSystem model_system(const std::vector<ExpSum>& system, const ProductOptions& product,
                         const std::vector<Covector>& extra_generators) {
  ModelSystem m;
  m.group = group_basis(system, extra_generators);
  const std::size_t q = m.group.rank();
  m.fan = TropicalFan::whole_space(q);
  for (const auto& f : system) {
    if (f.is_monomial()) {
      m.fan = TropicalFan(q, system.size());
      break;
    }
    std::vector<Covector> pts;
    for (const auto& t : f.terms()) {
      const IntVec c = m.group.coordinates(t.exponent);
      Covector p(q);
      for (std::size_t i = 0; i < q; ++i) p[i] = Scalar(mpq_class(c[i]));
      pts.push_back(std::move(p));
    }
    m.fan = stable_product(m.fan, skeleton_fan(convex_hull(pts), 1), product);
  }
  for (std::size_t j = 0; j < m.group.ambient_dim(); ++j) {
    m.winding_image.emplace_back(m.group.winding().matrix().col(j));
  }
  return m;
}

SubspaceFamily nontransversal_loci(const TropicalFan& fan, const std::vector<Vector>& winding_image) {
  SubspaceFamily family(fan.ambient_dim());
  const std::vector<Vec> l = to_rows(winding_image);
  for (const auto& wc : fan.cones()) {
    for (const auto& face : wc.cone.faces()) {
      std::vector<Vec> rows = face.span_basis();
      rows.insert(rows.end(), l.begin(), l.end());
      family.add(rows);
    }
  }
  return family;
}

namespace {

// The point x of V_K with v - x in L, when V_K and L are complementary.
std::optional<Vector> meet_point(const Cone& cone, const std::vector<Vector>& l, const Vector& v) {
  std::vector<Vec> cols = cone.span_basis();
  if (cols.size() + l.size() != v.dim()) return std::nullopt;
  for (const auto& x : l) cols.push_back(x.coords());
  const LinearSolution sol = solve_linear(LinearMap(columns(cols, v.dim())), v);
  if (sol.status != LinearSolution::Status::unique) return std::nullopt;
  Vector x(v.dim());
  for (std::size_t j = 0; j < cone.dim(); ++j) x += sol.particular[j] * Vector(cone.span_basis()[j]);
  return x;
}

}  // namespace

Chamber sample_chamber(const SubspaceFamily& family, const TropicalFan& fan, const std::vector<Vector>& winding_image,
                       std::uint64_t seed, int max_retries) {
  const std::size_t q = fan.ambient_dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Vector v(q);
    for (std::size_t i = 0; i < q; ++i) v[i] = Scalar(coord(rng));
    if (family.contains_point(v)) continue;
    Chamber c{v, {}};
    bool generic = true;
    for (std::size_t k = 0; k < fan.cones().size() && generic; ++k) {
      const Cone& cone = fan.cones()[k].cone;
      const auto x = meet_point(cone, winding_image, v);
      if (!x) continue;
      if (cone.contains_in_relative_interior(*x)) {
        c.active.push_back(k);
      } else if (cone.contains(*x)) {
        generic = false;
      }
    }
    if (generic) return c;
  }
  throw GenericityError("no chamber point found after " + std::to_string(max_retries) + " attempts");
}

std::vector<ShiftedLattice> zero_lattices(const ModelSystem& model, const Chamber& chamber) {
  const std::size_t n = model.group.ambient_dim();
  const std::size_t q = model.group.rank();
  if (model.fan.degree() != n) throw PreconditionError("zero lattices need a system of n equations");
  const Matrix& lambda = model.group.winding().matrix();  // q x n, rows lambda_i
  std::vector<ShiftedLattice> out;
  for (auto k : chamber.active) {
    if (k >= model.fan.cones().size()) throw PreconditionError("chamber refers to a missing cone");
    const WeightedCone& wc = model.fan.cones()[k];
    const auto x = meet_point(wc.cone, model.winding_image, chamber.point);
    if (!x || !wc.cone.contains_in_relative_interior(*x)) {
      throw PreconditionError("chamber data is stale for this system; resample the chamber");
    }
    std::vector<IntVec> rows;
    for (const auto& b : wc.cone.span_basis()) rows.push_back(integer_row(b));
    const std::vector<IntVec> m = integer_kernel(rows, q);
    if (m.size() != n) throw PreconditionError("active cone is not of codimension n");
    ShiftedLattice lat;
    std::vector<Covector> m_cov;
    Matrix mu(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Covector mj(q);
      for (std::size_t i = 0; i < q; ++i) mj[i] = Scalar(mpq_class(m[j][i]));
      const Vec row = lambda.apply_left(mj.coords());
      for (std::size_t c = 0; c < n; ++c) mu(j, c) = row[c];
      lat.characters.emplace_back(row);
      m_cov.push_back(std::move(mj));
    }
    const Scalar c = wc.weight.ratio_to(ExteriorForm::wedge_of(m_cov, q)).abs();
    if (!c.is_rational() || c.rational_part().get_den() != 1 || !c.rational_part().get_num().fits_slong_p()) {
      throw Error("cone weight " + c.to_string() + " is not an integer multiple of the lattice volume");
    }
    const Matrix inv = inverse(mu);
    for (std::size_t j = 0; j < n; ++j) lat.basis_over_2pi.emplace_back(inv.col(j));
    lat.multiplicity = c.rational_part().get_num().get_si();
    out.push_back(std::move(lat));
  }
  return out;
}

ScaledDensity density_sum(const std::vector<ShiftedLattice>& lattices) {
  if (lattices.empty()) return {Scalar(0), 0};
  const std::size_t n = lattices.front().basis_over_2pi.size();
  Scalar total;
  for (const auto& l : lattices) {
    if (l.basis_over_2pi.size() != n) throw PreconditionError("lattices of different rank");
    const Scalar det = det_rows(to_rows(l.basis_over_2pi));
    if (det.is_zero()) throw PreconditionError("rank-deficient lattice basis");
    if (l.multiplicity < 1) throw PreconditionError("lattice multiplicity must be positive");
    total += Scalar(static_cast<long>(l.multiplicity)) / det.abs();
  }
  return {total, -static_cast<int>(n)};
}

bool same_lattice(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  const Matrix ma = columns(to_rows(a), n);
  const Matrix mb = columns(to_rows(b), n);
  if (determinant(ma).is_zero() || determinant(mb).is_zero()) return false;
  const Matrix t = inverse(ma) * mb;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& x = t(i, j);
      if (!x.is_rational() || x.rational_part().get_den() != 1) return false;
    }
  return determinant(t).abs() == Scalar(1);
}

}  // namespace tropexp
