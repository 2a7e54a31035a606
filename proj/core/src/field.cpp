#include "tropexp/field.hpp"

#include <cmath>
#include <sstream>

#include "tropexp/error.hpp"

namespace tropexp {

bool is_squarefree(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::quadratic(std::int64_t radicand) {
  if (!is_squarefree(radicand)) {
    throw PreconditionError("quadratic field radicand must be squarefree and >= 2, got " +
                            std::to_string(radicand));
  }
  return FieldDescriptor(radicand);
}

FieldDescriptor FieldDescriptor::parse(const std::string& text) {
  if (text == "Q") return rationals();
  const std::string prefix = "Qsqrt:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad field radicand in '" + text + "'");
    }
    return quadratic(std::stoll(digits));
  }
  throw ParseError("unknown field '" + text + "' (expected Q or Qsqrt:d)");
}

std::string FieldDescriptor::to_string() const {
  return is_rational() ? "Q" : "Qsqrt:" + std::to_string(radicand_);
}

Scalar::Scalar(mpq_class a, mpq_class b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(radicand) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0 && !is_squarefree(radicand_)) {
    throw PreconditionError("scalar radicand must be squarefree and >= 2");
  }
  normalize();
}

Scalar Scalar::rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return Scalar(q);
}

void Scalar::normalize() {
  if (sgn(b_) == 0) radicand_ = 0;
}

std::int64_t Scalar::join(std::int64_t d1, std::int64_t d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw FieldMismatchError("cannot combine elements of Q(sqrt" + std::to_string(d1) + ") and Q(sqrt" +
                           std::to_string(d2) + ")");
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs; the larger square wins.
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = b_ * b_ * radicand_;
  const int c = cmp(lhs, rhs);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (sgn(b_) == 0) {
    Scalar r;
    r.a_ = 1 / a_;
    return r;
  }
  const mpq_class norm = a_ * a_ - b_ * b_ * radicand_;
  Scalar r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.radicand_ = radicand_;
  return r;
}

double Scalar::to_double() const {
  double v = a_.get_d();
  if (sgn(b_) != 0) v += b_.get_d() * std::sqrt(static_cast<double>(radicand_));
  return v;
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::ostringstream out;
  const bool has_a = sgn(a_) != 0;
  if (has_a) out << a_.get_str();
  const mpq_class mag = ::abs(b_);
  if (sgn(b_) < 0) {
    out << '-';
  } else if (has_a) {
    out << '+';
  }
  if (mag != 1) out << mag.get_str() << '*';
  out << "sqrt" << radicand_;
  return out.str();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  radicand_ = join(radicand_, o.radicand_);
  a_ += o.a_;
  if (sgn(o.b_) != 0) b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  radicand_ = join(radicand_, o.radicand_);
  a_ -= o.a_;
  if (sgn(o.b_) != 0) b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const std::int64_t d = join(radicand_, o.radicand_);
  const bool xb = sgn(b_) != 0;
  const bool yb = sgn(o.b_) != 0;
  if (!xb && !yb) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class na = a_ * o.a_;
  mpq_class nb;
  if (xb && yb) na += b_ * o.b_ * d;
  if (yb) nb += a_ * o.b_;
  if (xb) nb += b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  radicand_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw PreconditionError("division by zero");
  if (sgn(o.b_) == 0) {
    join(radicand_, o.radicand_);
    a_ /= o.a_;
    if (sgn(b_) != 0) b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

}  // namespace tropexp
