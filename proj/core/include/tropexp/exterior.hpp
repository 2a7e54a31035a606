#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropexp/linalg.hpp"

namespace tropexp {

/// Subsets of {0..n-1} are bitmasks; bit i stands for the dual basis covector e_i*.
using SubsetMask = std::uint32_t;

/// All size-k subsets of {0..n-1} in increasing mask order.
const std::vector<SubsetMask>& subsets_of_size(std::size_t n, std::size_t k);

/// Alternating k-form on an n-dimensional space, stored densely over the
/// basis e_I* = e_{i1}* ^ ... ^ e_{ik}* (i1 < ... < ik). Dimensions up to 12.
class ExteriorForm {
 public:
  ExteriorForm() = default;
  ExteriorForm(std::size_t dim, std::size_t degree);

  static ExteriorForm constant(std::size_t dim, const Scalar& value);
  static ExteriorForm from_covector(const Covector& f);
  /// f1 ^ ... ^ fk; with no factors, the constant 1 on `dim`.
  static ExteriorForm wedge_of(std::span<const Covector> factors, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  const Scalar& coefficient(SubsetMask mask) const;
  void set_coefficient(SubsetMask mask, Scalar value);
  /// Coefficients aligned with subsets_of_size(dim, degree).
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// Multilinear, alternating evaluation on exactly `degree` vectors.
  Scalar evaluate(std::span<const Vector> vectors) const;
  /// Contraction with v in the first slot.
  ExteriorForm interior(const Vector& v) const;
  /// (s^* w)(v1..vk) = w(s v1, .., s vk) for s given as a target x source matrix.
  ExteriorForm pullback(const Matrix& s) const;

  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  ExteriorForm& operator*=(const Scalar& s);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator*(const Scalar& s, ExteriorForm a) { return a *= s; }
  ExteriorForm operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

  /// If this == c * other (other nonzero), returns c; otherwise throws.
  Scalar ratio_to(const ExteriorForm& other) const;

 private:
  std::size_t index_of(SubsetMask mask) const;

  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::vector<Scalar> coeffs_{Scalar(0)};
};

/// Graded-anticommutative product. Degree overflow yields the zero form of
/// degree deg f + deg g (with no coefficients when that exceeds the dimension).
ExteriorForm wedge(const ExteriorForm& f, const ExteriorForm& g);

/// Determinant of the square matrix whose rows are the given vectors.
Scalar det_rows(std::span<const Vec> rows);

}  // namespace tropexp
