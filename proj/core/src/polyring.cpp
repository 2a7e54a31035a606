#include "tropexp/polyring.hpp"

#include <algorithm>
#include <map>

#include "tropexp/error.hpp"

namespace tropexp {
namespace {

bool monomial_less(const std::vector<Polytope>& a, const std::vector<Polytope>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void multisets(std::size_t m, std::size_t d, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == d) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < m; ++i) {
    cur.push_back(i);
    multisets(m, d, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PolytopeClass::PolytopeClass(std::size_t ambient, std::size_t degree, std::vector<Term> terms)
    : ambient_(ambient), degree_(degree), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.polytopes.size() != degree_) throw PreconditionError("monomial degree differs from the class degree");
    for (const auto& p : t.polytopes)
      if (p.ambient_dim() != ambient_) throw PreconditionError("polytope lives in the wrong space");
  }
  canonicalize();
}

void PolytopeClass::canonicalize() {
  if (degree_ > ambient_) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) std::sort(t.polytopes.begin(), t.polytopes.end());
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return monomial_less(a.polytopes, b.polytopes); });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().polytopes == t.polytopes) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.coeff.is_zero(); }),
               merged.end());
  terms_ = std::move(merged);
}

PolytopeClass PolytopeClass::constant(std::size_t ambient, const Scalar& value) {
  return PolytopeClass(ambient, 0, {Term{value, {}}});
}

PolytopeClass PolytopeClass::generator(const Polytope& p) { return PolytopeClass(p.ambient_dim(), 1, {Term{Scalar(1), {p}}}); }

PolytopeClass& PolytopeClass::operator+=(const PolytopeClass& o) {
  if (o.ambient_ != ambient_ || o.degree_ != degree_) throw PreconditionError("adding classes of different shape");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

PolytopeClass& PolytopeClass::operator-=(const PolytopeClass& o) { return *this += Scalar(-1) * o; }

PolytopeClass operator*(const Scalar& s, const PolytopeClass& a) {
  PolytopeClass out = a;
  for (auto& t : out.terms_) t.coeff *= s;
  out.canonicalize();
  return out;
}

PolytopeClass class_multiply(const PolytopeClass& a, const PolytopeClass& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw PreconditionError("multiplying classes in different spaces");
  std::vector<PolytopeClass::Term> terms;
  const std::size_t degree = a.degree() + b.degree();
  if (degree <= a.ambient_dim()) {
    for (const auto& x : a.terms()) {
      for (const auto& y : b.terms()) {
        PolytopeClass::Term t{x.coeff * y.coeff, x.polytopes};
        t.polytopes.insert(t.polytopes.end(), y.polytopes.begin(), y.polytopes.end());
        terms.push_back(std::move(t));
      }
    }
  }
  return PolytopeClass(a.ambient_dim(), degree, std::move(terms));
}

Scalar top_pairing(const PolytopeClass& s) {
  if (s.degree() != s.ambient_dim()) {
    throw PreconditionError("top pairing needs degree " + std::to_string(s.ambient_dim()) + ", got " +
                            std::to_string(s.degree()));
  }
  Scalar total;
  for (const auto& t : s.terms()) total += t.coeff * mixed_volume(t.polytopes);
  return total;
}

ProbeFamily default_probes(const PolytopeClass& a, std::size_t degree, const std::vector<Polytope>& extra) {
  const std::size_t n = a.ambient_dim();
  std::vector<Polytope> gens;
  for (const auto& t : a.terms()) gens.insert(gens.end(), t.polytopes.begin(), t.polytopes.end());
  for (std::size_t i = 0; i < n; ++i) gens.push_back(segment(Covector::unit(n, i)));
  gens.push_back(standard_simplex(n));
  gens.insert(gens.end(), extra.begin(), extra.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  ProbeFamily family;
  family.name = "monomials of degree " + std::to_string(degree) + " in " + std::to_string(gens.size()) +
                " polytopes (operands, coordinate segments, standard simplex" + (extra.empty() ? "" : ", extra") + ")";
  std::vector<std::vector<std::size_t>> idx;
  std::vector<std::size_t> cur;
  multisets(gens.size(), degree, 0, cur, idx);
  for (const auto& m : idx) {
    std::vector<Polytope> ps;
    for (auto i : m) ps.push_back(gens[i]);
    family.probes.push_back(PolytopeClass(n, degree, {PolytopeClass::Term{Scalar(1), ps}}));
  }
  return family;
}

ZeroVerdict is_zero_class(const PolytopeClass& a, const ProbeFamily& probes) {
  ZeroVerdict v;
  v.family = probes.name;
  const std::size_t want = a.ambient_dim() - a.degree();
  for (const auto& p : probes.probes) {
    if (p.ambient_dim() != a.ambient_dim() || p.degree() != want) {
      throw PreconditionError("probe of degree " + std::to_string(p.degree()) + " where " + std::to_string(want) +
                              " is needed");
    }
  }
  for (const auto& p : probes.probes) {
    ++v.probes_checked;
    const Scalar value = top_pairing(class_multiply(a, p));
    if (!value.is_zero()) {
      v.nonzero = true;
      v.witness = p;
      v.witness_value = value;
      return v;
    }
  }
  return v;
}

TropicalFan to_trop(const PolytopeClass& a, const ProductOptions& options) {
  const std::size_t n = a.ambient_dim();
  TropicalFan total(n, a.degree());
  std::map<Polytope, TropicalFan> cache;
  auto k1 = [&](const Polytope& p) -> const TropicalFan& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, skeleton_fan(p, 1)).first;
    return it->second;
  };
  for (const auto& t : a.terms()) {
    TropicalFan f = TropicalFan::whole_space(n);
    for (const auto& p : t.polytopes) f = stable_product(f, k1(p), options);
    total = fan_sum(total, f.scaled(t.coeff));
  }
  return total;
}

}  // namespace tropexp
