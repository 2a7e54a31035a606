#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tropexp {

/// Which ordered field scalars live in: Q, or Q(sqrt d) for squarefree d >= 2.
class FieldDescriptor {
 public:
  FieldDescriptor() = default;

  static FieldDescriptor rationals() { return {}; }
  /// Throws PreconditionError unless d is squarefree and >= 2.
  static FieldDescriptor quadratic(std::int64_t radicand);
  /// Accepts "Q" and "Qsqrt:d".
  static FieldDescriptor parse(const std::string& text);

  bool is_rational() const noexcept { return radicand_ == 0; }
  /// 0 for Q.
  std::int64_t radicand() const noexcept { return radicand_; }
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  explicit FieldDescriptor(std::int64_t d) : radicand_(d) {}
  std::int64_t radicand_ = 0;
};

bool is_squarefree(std::int64_t n);

/// Exact element a + b*sqrt(d) of Q or Q(sqrt d).
///
/// The radicand travels with the value; it is 0 whenever b == 0, so a rational
/// scalar combines freely with elements of any quadratic field. Combining
/// irrational elements of two different fields throws FieldMismatchError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }
  Scalar(mpq_class a, mpq_class b, std::int64_t radicand);

  static Scalar sqrt_of(std::int64_t radicand) { return Scalar(0, 1, radicand); }
  /// Parses "p", "p/q".
  static Scalar rational(const std::string& text);

  const mpq_class& rational_part() const noexcept { return a_; }
  const mpq_class& irrational_part() const noexcept { return b_; }
  std::int64_t radicand() const noexcept { return radicand_; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }
  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// Exact sign in {-1, 0, 1} with respect to the real embedding sqrt(d) > 0.
  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  /// Throws PreconditionError on zero.
  Scalar inverse() const;
  /// Field conjugate a - b*sqrt(d).
  Scalar conjugate() const;

  double to_double() const;
  /// Human-readable exact text, e.g. "3/2", "sqrt2", "1-2*sqrt3".
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.radicand_ == y.radicand_);
  }
  friend int compare(const Scalar& x, const Scalar& y) { return (x - y).sign(); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return compare(x, y) < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return compare(x, y) > 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return compare(x, y) >= 0; }

 private:
  static std::int64_t join(std::int64_t d1, std::int64_t d2);
  void normalize();

  mpq_class a_;
  mpq_class b_;
  std::int64_t radicand_ = 0;
};

}  // namespace tropexp
