#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropexp/field.hpp"

namespace tropexp {

using Vec = std::vector<Scalar>;

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y);
bool is_zero(std::span<const Scalar> x);
/// Divides by the absolute value of the first nonzero entry (no-op on zero).
void normalize_direction(Vec& x);
/// Lexicographic comparison in the field order.
int lex_compare(std::span<const Scalar> x, std::span<const Scalar> y);

struct PrimalTag {};
struct DualTag {};

/// Coordinate vector with a variance tag so that vectors of V and covectors of
/// V* cannot be mixed up.
template <class Tag>
class Coordinates {
 public:
  Coordinates() = default;
  explicit Coordinates(std::size_t dim) : c_(dim) {}
  explicit Coordinates(Vec coords) : c_(std::move(coords)) {}
  Coordinates(std::initializer_list<Scalar> coords) : c_(coords) {}

  static Coordinates unit(std::size_t dim, std::size_t i) {
    Coordinates r(dim);
    r.c_[i] = 1;
    return r;
  }

  std::size_t dim() const noexcept { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Vec& coords() const noexcept { return c_; }
  bool is_zero() const { return tropexp::is_zero(c_); }

  Coordinates& operator+=(const Coordinates& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Coordinates& operator-=(const Coordinates& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Coordinates& operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend Coordinates operator+(Coordinates x, const Coordinates& y) { return x += y; }
  friend Coordinates operator-(Coordinates x, const Coordinates& y) { return x -= y; }
  friend Coordinates operator*(const Scalar& s, Coordinates x) { return x *= s; }
  Coordinates operator-() const {
    Coordinates r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend bool operator==(const Coordinates& x, const Coordinates& y) { return x.c_ == y.c_; }
  friend bool operator<(const Coordinates& x, const Coordinates& y) { return lex_compare(x.c_, y.c_) < 0; }

 private:
  Vec c_;
};

/// Element of the primal space V (points z, directions v).
using Vector = Coordinates<PrimalTag>;
/// Element of the dual space V* (exponents, functionals, polytope vertices).
using Covector = Coordinates<DualTag>;

inline Scalar pair(const Covector& f, const Vector& v) { return dot(f.coords(), v.coords()); }

/// Dense row-major matrix over the field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  /// One row per entry; all rows must have length `cols`.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_list() const;
  Matrix transpose() const;

  Vec apply(std::span<const Scalar> x) const;
  /// Row vector times matrix: returns y with y_j = sum_i x_i M(i, j).
  Vec apply_left(std::span<const Scalar> x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form; zero rows are dropped.
struct EchelonForm {
  Matrix reduced;                    // rank x cols, pivot entries equal to 1
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

EchelonForm rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank_of_rows(const std::vector<Vec>& rows, std::size_t cols);
/// Ordered reduced-echelon basis of {x : m x = 0}: one vector per free column,
/// with a 1 in that column.
std::vector<Vec> nullspace(const Matrix& m);
/// Canonical basis of the row span (the rows of the reduced echelon form).
std::vector<Vec> row_space_basis(const std::vector<Vec>& rows, std::size_t cols);
Scalar determinant(Matrix m);
/// Throws PreconditionError when singular.
Matrix inverse(const Matrix& m);
/// Row-space membership.
bool in_row_span(const std::vector<Vec>& rows, std::span<const Scalar> x, std::size_t cols);

/// A linear operator between coordinate spaces, stored as a
/// target_dim x source_dim matrix acting on column vectors.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix matrix);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t source_dim() const noexcept { return m_.cols(); }
  std::size_t target_dim() const noexcept { return m_.rows(); }
  std::size_t rank() const noexcept { return rank_; }
  bool is_injective() const noexcept { return rank_ == source_dim(); }
  bool is_surjective() const noexcept { return rank_ == target_dim(); }

  Vector apply(const Vector& v) const;
  /// Adjoint s': U* -> V*, f |-> f o s.
  Covector adjoint(const Covector& f) const;
  LinearMap compose(const LinearMap& inner) const;  // this o inner

  /// Ordered reduced-echelon basis of the kernel.
  std::vector<Vector> kernel_basis() const;
  /// Basis of the image: the pivot columns of the matrix.
  std::vector<Vector> image_basis() const;

 private:
  Matrix m_;
  std::size_t rank_ = 0;
};

struct LinearSolution {
  enum class Status { unique, underdetermined, inconsistent };
  Status status = Status::inconsistent;
  Vector particular;            // valid unless inconsistent
  std::vector<Vector> kernel;   // ordered reduced-echelon kernel basis
};

/// Solves map(x) = target exactly.
LinearSolution solve_linear(const LinearMap& map, const Vector& target);

}  // namespace tropexp
