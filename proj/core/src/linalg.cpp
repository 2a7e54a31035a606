#include "tropexp/linalg.hpp"

#include "tropexp/error.hpp"

namespace tropexp {

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw PreconditionError("dimension mismatch in dot product");
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    s += x[i] * y[i];
  }
  return s;
}

bool is_zero(std::span<const Scalar> x) {
  for (const auto& v : x) {
    if (!v.is_zero()) return false;
  }
  return true;
}

void normalize_direction(Vec& x) {
  for (const auto& v : x) {
    if (v.is_zero()) continue;
    const Scalar scale = v.abs();
    if (scale == Scalar(1)) return;
    const Scalar inv = scale.inverse();
    for (auto& y : x) {
      if (!y.is_zero()) y *= inv;
    }
    return;
  }
}

int lex_compare(std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == y[i]) continue;
    return compare(x[i], y[i]);
  }
  return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw PreconditionError("dimension mismatch in matrix-vector product");
  Vec y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& m = (*this)(r, c);
      if (m.is_zero() || x[c].is_zero()) continue;
      y[r] += m * x[c];
    }
  }
  return y;
}

Vec Matrix::apply_left(std::span<const Scalar> x) const {
  if (x.size() != rows_) throw PreconditionError("dimension mismatch in covector-matrix product");
  Vec y(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& m = (*this)(r, c);
      if (m.is_zero()) continue;
      y[c] += x[r] * m;
    }
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("dimension mismatch in matrix product");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        p(i, j) += x * b(k, j);
      }
    }
  return p;
}

EchelonForm rref(const Matrix& input) {
  Matrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(r, j).is_zero()) continue;
        m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::size_t rank_of_rows(const std::vector<Vec>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(Matrix::from_rows(rows, cols));
}

std::vector<Vec> nullspace(const Matrix& m) {
  const EchelonForm e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> row_space_basis(const std::vector<Vec>& rows, std::size_t cols) {
  if (rows.empty()) return {};
  return rref(Matrix::from_rows(rows, cols)).reduced.row_list();
}

Scalar determinant(Matrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw PreconditionError("determinant of non-square matrix");
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (m(c, j).is_zero()) continue;
        m(i, j) -= f * m(c, j);
      }
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw PreconditionError("inverse of non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const EchelonForm e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

bool in_row_span(const std::vector<Vec>& rows, std::span<const Scalar> x, std::size_t cols) {
  std::vector<Vec> ext = rows;
  ext.emplace_back(x.begin(), x.end());
  return rank_of_rows(ext, cols) == rank_of_rows(rows, cols);
}

LinearMap::LinearMap(Matrix matrix) : m_(std::move(matrix)), rank_(tropexp::rank(m_)) {}

Vector LinearMap::apply(const Vector& v) const { return Vector(m_.apply(v.coords())); }

Covector LinearMap::adjoint(const Covector& f) const { return Covector(m_.apply_left(f.coords())); }

LinearMap LinearMap::compose(const LinearMap& inner) const { return LinearMap(m_ * inner.m_); }

std::vector<Vector> LinearMap::kernel_basis() const {
  std::vector<Vector> out;
  for (auto& v : nullspace(m_)) out.emplace_back(std::move(v));
  return out;
}

std::vector<Vector> LinearMap::image_basis() const {
  const EchelonForm e = rref(m_);
  std::vector<Vector> out;
  for (auto p : e.pivots) out.emplace_back(m_.col(p));
  return out;
}

LinearSolution solve_linear(const LinearMap& map, const Vector& target) {
  const Matrix& a = map.matrix();
  if (target.dim() != a.rows()) throw PreconditionError("target dimension does not match the map");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = target[i];
  }
  const EchelonForm e = rref(aug);
  LinearSolution sol;
  if (!e.pivots.empty() && e.pivots.back() == n) {
    sol.status = LinearSolution::Status::inconsistent;
    return sol;
  }
  Vec x(n);
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.reduced(i, n);
  sol.particular = Vector(std::move(x));
  sol.kernel = map.kernel_basis();
  sol.status = sol.kernel.empty() ? LinearSolution::Status::unique : LinearSolution::Status::underdetermined;
  return sol;
}

}  // namespace tropexp
