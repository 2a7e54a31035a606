#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropexp/fan.hpp"
#include "tropexp/polytope.hpp"

namespace tropexp {

/// Homogeneous element of degree k of the ring of polytopes: a formal
/// combination of unordered k-tuples of polytopes in an N-dimensional dual space.
class PolytopeClass {
 public:
  struct Term {
    Scalar coeff;
    std::vector<Polytope> polytopes;  // sorted
    friend bool operator==(const Term&, const Term&) = default;
  };

  PolytopeClass() = default;
  PolytopeClass(std::size_t ambient, std::size_t degree) : ambient_(ambient), degree_(degree) {}
  /// Canonicalizes; every monomial must have `degree` factors in the ambient space.
  PolytopeClass(std::size_t ambient, std::size_t degree, std::vector<Term> terms);

  static PolytopeClass constant(std::size_t ambient, const Scalar& value);
  static PolytopeClass generator(const Polytope& p);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_formally_zero() const noexcept { return terms_.empty(); }

  PolytopeClass& operator+=(const PolytopeClass& o);
  PolytopeClass& operator-=(const PolytopeClass& o);
  friend PolytopeClass operator+(PolytopeClass a, const PolytopeClass& b) { return a += b; }
  friend PolytopeClass operator-(PolytopeClass a, const PolytopeClass& b) { return a -= b; }
  friend PolytopeClass operator*(const Scalar& s, const PolytopeClass& a);
  friend bool operator==(const PolytopeClass&, const PolytopeClass&) = default;

 private:
  void canonicalize();

  std::size_t ambient_ = 0;
  std::size_t degree_ = 0;
  std::vector<Term> terms_;
};

/// Concatenation of monomials, extended bilinearly; zero beyond degree N.
PolytopeClass class_multiply(const PolytopeClass& a, const PolytopeClass& b);

/// Linear extension of the mixed volume to classes of degree N.
Scalar top_pairing(const PolytopeClass& s);

/// A named list of probe classes of one degree.
struct ProbeFamily {
  std::string name;
  std::vector<PolytopeClass> probes;
};

/// All degree-d monomials in the polytopes of `a`, the coordinate segments,
/// the standard simplex and `extra`.
ProbeFamily default_probes(const PolytopeClass& a, std::size_t degree, const std::vector<Polytope>& extra = {});

struct ZeroVerdict {
  bool nonzero = false;
  std::optional<PolytopeClass> witness;  // set when nonzero
  Scalar witness_value;
  std::string family;
  std::size_t probes_checked = 0;
  /// "nonzero-with-witness" or "zero-relative-to-probes".
  std::string label() const { return nonzero ? "nonzero-with-witness" : "zero-relative-to-probes"; }
};

/// Pairs a against every probe of complementary degree; nonzero as soon as one pairing is.
ZeroVerdict is_zero_class(const PolytopeClass& a, const ProbeFamily& probes);

/// Sum over monomials of coeff * K_{D1,1} ... K_{Dk,1}.
TropicalFan to_trop(const PolytopeClass& a, const ProductOptions& options = {});

}  // namespace tropexp
