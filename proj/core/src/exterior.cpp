#include "tropexp/exterior.hpp"

#include <array>
#include <bit>

#include "tropexp/error.hpp"

namespace tropexp {
namespace {

constexpr std::size_t kMaxDim = 12;

struct SubsetTables {
  // by_size[n][k] lists masks; rank[n][mask] is the position within its size class.
  std::array<std::vector<std::vector<SubsetMask>>, kMaxDim + 1> by_size;
  std::array<std::vector<std::uint32_t>, kMaxDim + 1> rank;

  SubsetTables() {
    for (std::size_t n = 0; n <= kMaxDim; ++n) {
      by_size[n].assign(n + 2, {});
      rank[n].assign(std::size_t{1} << n, 0);
      for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m) {
        auto& bucket = by_size[n][static_cast<std::size_t>(std::popcount(m))];
        rank[n][m] = static_cast<std::uint32_t>(bucket.size());
        bucket.push_back(m);
      }
    }
  }
};

const SubsetTables& tables() {
  static const SubsetTables t;
  return t;
}

// Sign of the shuffle merging I and J into I|J: (-1)^{#(i in I, j in J, i > j)}.
int shuffle_sign(SubsetMask i, SubsetMask j) {
  int inversions = 0;
  while (j != 0) {
    const int low = std::countr_zero(j);
    j &= j - 1;
    inversions += std::popcount(i >> (low + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<std::size_t> bits_of(SubsetMask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace

const std::vector<SubsetMask>& subsets_of_size(std::size_t n, std::size_t k) {
  if (n > kMaxDim) throw PreconditionError("exterior algebra supports dimension <= 12");
  static const std::vector<SubsetMask> empty;
  if (k > n) return empty;
  return tables().by_size[n][k];
}

Scalar det_rows(std::span<const Vec> rows) {
  const std::size_t n = rows.size();
  if (n == 0) return Scalar(1);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw PreconditionError("det_rows needs a square matrix");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return determinant(std::move(m));
}

ExteriorForm::ExteriorForm(std::size_t dim, std::size_t degree)
    : dim_(dim), degree_(degree), coeffs_(subsets_of_size(dim, degree).size()) {}

ExteriorForm ExteriorForm::constant(std::size_t dim, const Scalar& value) {
  ExteriorForm f(dim, 0);
  f.coeffs_[0] = value;
  return f;
}

ExteriorForm ExteriorForm::from_covector(const Covector& cov) {
  ExteriorForm f(cov.dim(), 1);
  for (std::size_t i = 0; i < cov.dim(); ++i) f.coeffs_[i] = cov[i];
  return f;
}

ExteriorForm ExteriorForm::wedge_of(std::span<const Covector> factors, std::size_t dim) {
  ExteriorForm acc = constant(dim, Scalar(1));
  for (const auto& c : factors) acc = wedge(acc, from_covector(c));
  return acc;
}

std::size_t ExteriorForm::index_of(SubsetMask mask) const {
  if (std::popcount(mask) != static_cast<int>(degree_) || mask >= (SubsetMask{1} << dim_)) {
    throw PreconditionError("subset does not index a basis form of this degree");
  }
  return tables().rank[dim_][mask];
}

const Scalar& ExteriorForm::coefficient(SubsetMask mask) const { return coeffs_[index_of(mask)]; }

void ExteriorForm::set_coefficient(SubsetMask mask, Scalar value) { coeffs_[index_of(mask)] = std::move(value); }

bool ExteriorForm::is_zero() const { return tropexp::is_zero(coeffs_); }

Scalar ExteriorForm::evaluate(std::span<const Vector> vectors) const {
  if (vectors.size() != degree_) throw PreconditionError("form evaluated on the wrong number of vectors");
  for (const auto& v : vectors)
    if (v.dim() != dim_) throw PreconditionError("dimension mismatch in form evaluation");
  const auto& masks = subsets_of_size(dim_, degree_);
  Scalar total;
  std::vector<Vec> minor(degree_, Vec(degree_));
  for (std::size_t idx = 0; idx < masks.size(); ++idx) {
    if (coeffs_[idx].is_zero()) continue;
    const auto rows = bits_of(masks[idx]);
    for (std::size_t r = 0; r < degree_; ++r)
      for (std::size_t c = 0; c < degree_; ++c) minor[r][c] = vectors[c][rows[r]];
    const Scalar d = det_rows(minor);
    if (!d.is_zero()) total += coeffs_[idx] * d;
  }
  return total;
}

ExteriorForm ExteriorForm::interior(const Vector& v) const {
  if (degree_ == 0) throw PreconditionError("interior product of a 0-form");
  if (v.dim() != dim_) throw PreconditionError("dimension mismatch in interior product");
  ExteriorForm out(dim_, degree_ - 1);
  const auto& masks = subsets_of_size(dim_, degree_);
  for (std::size_t idx = 0; idx < masks.size(); ++idx) {
    if (coeffs_[idx].is_zero()) continue;
    const SubsetMask m = masks[idx];
    const auto bits = bits_of(m);
    for (std::size_t pos = 0; pos < bits.size(); ++pos) {
      const std::size_t i = bits[pos];
      if (v[i].is_zero()) continue;
      const SubsetMask rest = m & ~(SubsetMask{1} << i);
      Scalar term = coeffs_[idx] * v[i];
      if (pos % 2 == 1) term = -term;
      out.coeffs_[out.index_of(rest)] += term;
    }
  }
  return out;
}

ExteriorForm ExteriorForm::pullback(const Matrix& s) const {
  if (s.rows() != dim_) throw PreconditionError("pullback map target does not match form dimension");
  const std::size_t src = s.cols();
  ExteriorForm out(src, degree_);
  if (degree_ > src) return out;
  const auto& target_masks = subsets_of_size(dim_, degree_);
  const auto& source_masks = subsets_of_size(src, degree_);
  std::vector<Vec> minor(degree_, Vec(degree_));
  for (std::size_t j = 0; j < source_masks.size(); ++j) {
    const auto cols = bits_of(source_masks[j]);
    Scalar acc;
    for (std::size_t i = 0; i < target_masks.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      const auto rows = bits_of(target_masks[i]);
      for (std::size_t r = 0; r < degree_; ++r)
        for (std::size_t c = 0; c < degree_; ++c) minor[r][c] = s(rows[r], cols[c]);
      const Scalar d = det_rows(minor);
      if (!d.is_zero()) acc += coeffs_[i] * d;
    }
    out.coeffs_[j] = std::move(acc);
  }
  return out;
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw PreconditionError("adding forms of different shape");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw PreconditionError("subtracting forms of different shape");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

ExteriorForm& ExteriorForm::operator*=(const Scalar& s) {
  for (auto& c : coeffs_)
    if (!c.is_zero()) c *= s;
  return *this;
}

Scalar ExteriorForm::ratio_to(const ExteriorForm& other) const {
  if (dim_ != other.dim_ || degree_ != other.degree_) throw PreconditionError("ratio of forms of different shape");
  std::size_t pivot = coeffs_.size();
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    if (!other.coeffs_[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot == coeffs_.size()) throw PreconditionError("ratio to the zero form");
  const Scalar c = coeffs_[pivot] / other.coeffs_[pivot];
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != c * other.coeffs_[i]) throw PreconditionError("forms are not proportional");
  }
  return c;
}

ExteriorForm wedge(const ExteriorForm& f, const ExteriorForm& g) {
  if (f.dim() != g.dim()) throw PreconditionError("wedge of forms on different spaces");
  const std::size_t n = f.dim();
  ExteriorForm out(n, f.degree() + g.degree());
  if (f.degree() + g.degree() > n) return out;
  const auto& fm = subsets_of_size(n, f.degree());
  const auto& gm = subsets_of_size(n, g.degree());
  for (std::size_t i = 0; i < fm.size(); ++i) {
    const Scalar& a = f.coefficients()[i];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < gm.size(); ++j) {
      const Scalar& b = g.coefficients()[j];
      if (b.is_zero() || (fm[i] & gm[j]) != 0) continue;
      Scalar term = a * b;
      if (shuffle_sign(fm[i], gm[j]) < 0) term = -term;
      const SubsetMask m = fm[i] | gm[j];
      out.set_coefficient(m, out.coefficient(m) + term);
    }
  }
  return out;
}

}  // namespace tropexp
