#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropexp/fan.hpp"
#include "tropexp/lattice.hpp"
#include "tropexp/polytope.hpp"

namespace tropexp {

/// Complex number with real and imaginary parts in the scalar field.
struct Complex {
  Scalar re;
  Scalar im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::string to_string() const;
  Complex& operator+=(const Complex& o);
  Complex& operator*=(const Complex& o);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  Complex operator-() const { return {-re, -im}; }
  /// Throws PreconditionError for zero.
  Complex inverse() const;
  friend bool operator==(const Complex&, const Complex&) = default;
};

/// f(z) = sum c * exp(<z, lambda>) with real exponents lambda over the field.
/// Terms are sorted by exponent; exponents are distinct and coefficients nonzero.
class ExpSum {
 public:
  struct Term {
    Complex coeff;
    Covector exponent;
    friend bool operator==(const Term&, const Term&) = default;
  };

  ExpSum() = default;
  /// Merges like terms and drops zero coefficients. Exponents must lie in the field.
  ExpSum(std::size_t n, FieldDescriptor field, std::vector<Term> terms);

  std::size_t ambient_dim() const noexcept { return n_; }
  const FieldDescriptor& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::vector<Covector> support() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Re-parseable text.
  std::string to_string() const;

  friend bool operator==(const ExpSum&, const ExpSum&) = default;

 private:
  std::size_t n_ = 0;
  FieldDescriptor field_;
  std::vector<Term> terms_;
};

/// Parses sums and products of constants and exp(linear form in z1..zn).
/// Constants may use rationals, decimals, i, and sqrt(k) / sqrtk when the
/// square root lies in `field`. Throws ParseError with the offending position.
ExpSum parse_expsum(const std::string& text, const FieldDescriptor& field, std::size_t n);

Polytope newton_polytope(const ExpSum& f);

/// Z-basis lambda_1..lambda_q of the group generated by all exponents (and
/// optional extra generators), with the winding map s_G : R^n -> R^q whose
/// rows are the lambda_i.
class GroupBasis {
 public:
  GroupBasis() = default;
  GroupBasis(CovectorGroup group, std::size_t n);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t rank() const noexcept { return group_.rank(); }
  const std::vector<Covector>& basis() const noexcept { return group_.basis(); }
  const LinearMap& winding() const noexcept { return winding_; }
  /// Integer coordinates of an exponent; throws PreconditionError if it is not in the group.
  IntVec coordinates(const Covector& exponent) const;
  bool covers(const ExpSum& f) const;

 private:
  std::size_t n_ = 0;
  CovectorGroup group_;
  LinearMap winding_;
};

/// Throws PreconditionError naming a missing direction when the exponents do not span R^n*.
GroupBasis group_basis(const std::vector<ExpSum>& fs, const std::vector<Covector>& extra_generators = {});

enum class TropRoute { direct, model };

/// Exact value times (2 pi)^two_pi_power.
struct ScaledDensity {
  Scalar value;
  int two_pi_power = 0;
  std::string to_string() const;
  double approximate() const;
  friend bool operator==(const ScaledDensity&, const ScaledDensity&) = default;
};

struct TropOptions {
  TropRoute route = TropRoute::direct;
  /// Group for the model route; computed from the inputs when absent.
  std::optional<GroupBasis> group;
  ProductOptions product;
};

/// Tropicalization of {f = 0}: K_{Delta,1} directly, or the pull-back along
/// s_G of the skeleton fan of the lattice Newton polytope. Monomials give the empty fan.
TropicalFan hypersurface_trop(const ExpSum& f, const TropOptions& options = {});

/// Stable product of the hypersurface tropicalizations (a generic toric shift
/// of the system). Degree above n gives the zero fan and a diagnostic.
TropicalFan system_trop(const std::vector<ExpSum>& fs, const TropOptions& options = {},
                        Diagnostics* diagnostics = nullptr);

/// Zero-cone weight of the product of the systems' tropicalizations, times (2 pi)^-n.
ScaledDensity intersection_index(const std::vector<std::vector<ExpSum>>& systems, const TropOptions& options = {});
ScaledDensity weak_density(const std::vector<ExpSum>& system, const TropOptions& options = {});

/// Exponential sum with support the vertices of p and unit coefficients.
ExpSum realize_fan(const Polytope& p);

/// The common field of a set of scalars' radicands (Q if all rational).
FieldDescriptor field_of(const std::vector<Covector>& points);

}  // namespace tropexp
