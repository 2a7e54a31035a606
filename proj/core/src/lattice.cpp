#include "tropexp/lattice.hpp"

#include "tropexp/error.hpp"

namespace tropexp {
namespace {

void sub_multiple(IntVec& row, const IntVec& by, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (by[j] != 0) row[j] -= q * by[j];
}

// Unimodular row reduction of `rows` on columns [0, reduce_cols). Returns the
// pivot columns; rows past the returned rank have zeros on those columns.
// When `reduce_above` is set the pivots are made positive and entries above
// them reduced into [0, pivot).
std::vector<std::size_t> integer_echelon(std::vector<IntVec>& rows, std::size_t reduce_cols, bool reduce_above) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < reduce_cols && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        sub_multiple(rows[i], rows[r], q);
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    if (reduce_above) {
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        sub_multiple(rows[i], rows[r], q);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntegerLattice::IntegerLattice(const std::vector<IntVec>& generators, std::size_t ambient) : ambient_(ambient) {
  std::vector<IntVec> rows = generators;
  for (const auto& g : rows)
    if (g.size() != ambient) throw PreconditionError("lattice generator has the wrong length");
  pivots_ = integer_echelon(rows, ambient, true);
  rows.resize(pivots_.size());
  basis_ = std::move(rows);
}

std::optional<IntVec> IntegerLattice::coordinates(const IntVec& x) const {
  if (x.size() != ambient_) throw PreconditionError("lattice coordinates: wrong length");
  IntVec residual = x;
  IntVec coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (!mpz_divisible_p(residual[p].get_mpz_t(), basis_[i][p].get_mpz_t())) return std::nullopt;
    coords[i] = residual[p] / basis_[i][p];
    sub_multiple(residual, basis_[i], coords[i]);
  }
  for (const auto& v : residual)
    if (v != 0) return std::nullopt;
  return coords;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, std::size_t ambient) {
  const std::size_t k = rows.size();
  std::vector<IntVec> aug(ambient, IntVec(k + ambient));
  for (std::size_t j = 0; j < ambient; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      if (rows[i].size() != ambient) throw PreconditionError("integer_kernel: ragged rows");
      aug[j][i] = rows[i][j];
    }
    aug[j][k + j] = 1;
  }
  const auto pivots = integer_echelon(aug, k, false);
  std::vector<IntVec> kernel;
  for (std::size_t r = pivots.size(); r < ambient; ++r) {
    kernel.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(k), aug[r].end());
  }
  // Canonical form for the saturated kernel lattice.
  if (!kernel.empty()) {
    IntegerLattice canon(kernel, ambient);
    return canon.basis();
  }
  return kernel;
}

IntVec CovectorGroup::rational_coordinates_scaled(const Covector& f, bool* exact) const {
  const std::size_t parts = radicand_ == 0 ? 1 : 2;
  IntVec out(dim_ * parts);
  *exact = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    const Scalar& s = f[i];
    if (!s.is_rational() && radicand_ == 0) {
      *exact = false;  // irrational covectors are never in a rational group
      continue;
    }
    if (!s.is_rational() && s.radicand() != radicand_) {
      throw FieldMismatchError("exponent outside the declared field");
    }
    const mpq_class a = s.rational_part() * denominator_;
    if (a.get_den() != 1) *exact = false;
    out[i] = a.get_num();
    if (parts == 2) {
      const mpq_class b = s.irrational_part() * denominator_;
      if (b.get_den() != 1) *exact = false;
      out[dim_ + i] = b.get_num();
    }
  }
  return out;
}

std::optional<IntVec> CovectorGroup::coordinates(const Covector& f) const {
  if (f.dim() != dim_) throw PreconditionError("covector dimension does not match the group");
  bool exact = true;
  const IntVec scaled = rational_coordinates_scaled(f, &exact);
  if (!exact) return std::nullopt;
  return lattice_.coordinates(scaled);
}

CovectorGroup hnf_basis(std::span<const Covector> generators, std::size_t n, std::int64_t radicand) {
  CovectorGroup g;
  g.dim_ = n;
  g.radicand_ = radicand;
  mpz_class den = 1;
  for (const auto& f : generators) {
    if (f.dim() != n) throw PreconditionError("generator dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), f[i].rational_part().get_den_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), f[i].irrational_part().get_den_mpz_t());
    }
  }
  g.denominator_ = den;
  std::vector<IntVec> rows;
  rows.reserve(generators.size());
  for (const auto& f : generators) {
    bool exact = true;
    rows.push_back(g.rational_coordinates_scaled(f, &exact));
  }
  const std::size_t parts = radicand == 0 ? 1 : 2;
  g.lattice_ = IntegerLattice(rows, n * parts);
  for (const auto& row : g.lattice_.basis()) {
    Covector c(n);
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class a(row[i], den);
      a.canonicalize();
      if (parts == 2) {
        mpq_class b(row[n + i], den);
        b.canonicalize();
        c[i] = Scalar(a, b, radicand);
      } else {
        c[i] = Scalar(a);
      }
    }
    g.basis_.push_back(std::move(c));
  }
  return g;
}

}  // namespace tropexp
