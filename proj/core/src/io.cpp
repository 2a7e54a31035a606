#include "tropexp/io.hpp"

#include <sstream>

#include "tropexp/error.hpp"

namespace tropexp::io {
namespace {

template <class F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid ") + what + ": " + e.what());
  }
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t size_value(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::int64_t radicand_of(std::span<const Scalar> xs, std::int64_t d = 0) {
  for (const auto& x : xs) {
    if (x.radicand() == 0) continue;
    if (d != 0 && d != x.radicand()) throw FieldMismatchError("mixed quadratic fields in one document");
    d = x.radicand();
  }
  return d;
}

Json field_json(std::int64_t d) {
  return to_json(d == 0 ? FieldDescriptor::rationals() : FieldDescriptor::quadratic(d));
}

std::string mask_key(SubsetMask mask) {
  std::string out;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!(mask & (SubsetMask{1} << i))) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(i + 1);
  }
  return out;
}

SubsetMask mask_from_key(const std::string& key, std::size_t dim, std::size_t degree) {
  SubsetMask mask = 0;
  std::size_t count = 0;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long idx = 0;
    try {
      idx = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad weight index list \"" + key + "\"");
    }
    if (pos != item.size() || idx < 1 || idx > dim) throw ParseError("bad weight index list \"" + key + "\"");
    const SubsetMask bit = SubsetMask{1} << (idx - 1);
    if (mask & bit) throw ParseError("repeated index in \"" + key + "\"");
    mask |= bit;
    ++count;
  }
  if (count != degree) throw ParseError("weight key \"" + key + "\" does not have " + std::to_string(degree) + " indices");
  return mask;
}

std::vector<Vector> vectors_from_json(const Json& j, const FieldDescriptor& field, std::size_t dim) {
  std::vector<Vector> out;
  if (!j.is_array()) throw ParseError("expected an array of vectors");
  for (const auto& v : j) out.emplace_back(coords_from_json(v, field, dim));
  return out;
}

Json vectors_json(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v.coords()));
  return a;
}

}  // namespace

Json to_json(const FieldDescriptor& f) {
  if (f.is_rational()) return Json{{"kind", "Q"}};
  return Json{{"kind", "Q_sqrt"}, {"d", f.radicand()}};
}

FieldDescriptor field_from_json(const Json& j) {
  return guarded("field", [&] {
    if (j.is_string()) return FieldDescriptor::parse(j.get<std::string>());
    const std::string kind = require(j, "kind").get<std::string>();
    if (kind == "Q") return FieldDescriptor::rationals();
    if (kind == "Q_sqrt") return FieldDescriptor::quadratic(require(j, "d").get<std::int64_t>());
    throw ParseError("unknown field kind \"" + kind + "\"");
  });
}

FieldDescriptor document_field(const Json& j, const FieldDescriptor& fallback) {
  if (j.is_object() && j.contains("field")) return field_from_json(j.at("field"));
  return fallback;
}

Json to_json(const Scalar& s) {
  return Json{{"a", Scalar(s.rational_part()).to_string()}, {"b", Scalar(s.irrational_part()).to_string()}};
}

Scalar scalar_from_json(const Json& j, const FieldDescriptor& field) {
  return guarded("scalar", [&] {
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Scalar::rational(j.get<std::string>());
    const Scalar a = Scalar::rational(require(j, "a").get<std::string>());
    const Scalar b = j.contains("b") ? Scalar::rational(j.at("b").get<std::string>()) : Scalar(0);
    if (b.is_zero()) return a;
    if (field.is_rational()) throw ParseError("irrational scalar in a rational document");
    return Scalar(a.rational_part(), b.rational_part(), field.radicand());
  });
}

Json to_json(std::span<const Scalar> coords) {
  Json a = Json::array();
  for (const auto& x : coords) a.push_back(to_json(x));
  return a;
}

Vec coords_from_json(const Json& j, const FieldDescriptor& field, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw ParseError("expected " + std::to_string(dim) + " coordinates");
  }
  Vec out;
  for (const auto& x : j) out.push_back(scalar_from_json(x, field));
  return out;
}

Json to_json(const Polytope& p) {
  std::int64_t d = 0;
  Json verts = Json::array();
  for (const auto& v : p.vertices()) {
    d = radicand_of(v.coords(), d);
    verts.push_back(to_json(v.coords()));
  }
  return Json{{"field", field_json(d)}, {"dim", p.ambient_dim()}, {"vertices", verts}};
}

Polytope polytope_from_json(const Json& j, const FieldDescriptor& field) {
  return guarded("polytope", [&] {
    const FieldDescriptor f = document_field(j, field);
    const std::size_t n = size_value(j, "dim");
    std::vector<Covector> pts;
    for (const auto& v : require(j, "vertices")) pts.emplace_back(coords_from_json(v, f, n));
    if (pts.empty()) throw ParseError("polytope without vertices");
    return convex_hull(pts);
  });
}

Json to_json(const TropicalFan& fan) {
  std::int64_t d = 0;
  Json cones = Json::array();
  const auto& masks = subsets_of_size(fan.ambient_dim(), fan.degree());
  for (const auto& wc : fan.cones()) {
    Json weight = Json::object();
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const Scalar& c = wc.weight.coefficients()[i];
      if (c.is_zero()) continue;
      d = radicand_of(std::span<const Scalar>(&c, 1), d);
      weight[mask_key(masks[i])] = to_json(c);
    }
    for (const auto& r : wc.cone.rays()) d = radicand_of(r.coords(), d);
    for (const auto& r : wc.cone.lineality()) d = radicand_of(r.coords(), d);
    Json orient = Json::array();
    for (const auto& b : wc.cone.span_basis()) orient.push_back(to_json(b));
    cones.push_back(Json{{"rays", vectors_json(wc.cone.rays())},
                         {"lineality", vectors_json(wc.cone.lineality())},
                         {"orient", orient},
                         {"weight", weight}});
  }
  return Json{{"field", field_json(d)}, {"dim", fan.ambient_dim()}, {"puredim", fan.pure_dim()}, {"cones", cones}};
}

TropicalFan fan_from_json(const Json& j, const FieldDescriptor& field) {
  return guarded("fan", [&] {
    const FieldDescriptor f = document_field(j, field);
    const std::size_t n = size_value(j, "dim");
    const Json& pd = require(j, "puredim");
    if (!pd.is_number_integer()) throw ParseError("\"puredim\" must be an integer");
    const long pure = pd.get<long>();
    if (pure > static_cast<long>(n)) throw ParseError("pure dimension exceeds the ambient dimension");
    if (n > 12) throw ParseError("ambient dimension above 12 is not supported");
    const std::size_t degree = static_cast<std::size_t>(static_cast<long>(n) - pure);
    TropicalFan fan(n, degree);
    for (const auto& c : require(j, "cones")) {
      const std::vector<Vector> rays = vectors_from_json(require(c, "rays"), f, n);
      const std::vector<Vector> lin =
          c.contains("lineality") ? vectors_from_json(c.at("lineality"), f, n) : std::vector<Vector>{};
      Cone cone = Cone::from_generators(n, rays, lin);
      if (static_cast<long>(cone.dim()) != pure) throw ParseError("cone dimension differs from \"puredim\"");
      if (c.contains("orient")) {
        std::vector<Vec> rows;
        for (const auto& r : c.at("orient")) rows.push_back(coords_from_json(r, f, n));
        if (row_space_basis(rows, n) != cone.span_basis() || rows.size() != cone.dim()) {
          throw ParseError("\"orient\" is not a basis of the cone's span");
        }
      }
      ExteriorForm w(n, degree);
      const Json& weight = require(c, "weight");
      if (!weight.is_object()) throw ParseError("\"weight\" must be an object");
      for (const auto& [key, value] : weight.items()) w.set_coefficient(mask_from_key(key, n, degree), scalar_from_json(value, f));
      fan.add(std::move(cone), std::move(w));
    }
    return fan;
  });
}

Json to_json(const LinearMap& m) {
  std::int64_t d = 0;
  Json rows = Json::array();
  for (const auto& r : m.matrix().row_list()) {
    d = radicand_of(r, d);
    rows.push_back(to_json(r));
  }
  return Json{{"field", field_json(d)}, {"source_dim", m.source_dim()}, {"target_dim", m.target_dim()}, {"rows", rows}};
}

LinearMap map_from_json(const Json& j, const FieldDescriptor& field) {
  return guarded("linear map", [&] {
    const FieldDescriptor f = document_field(j, field);
    const std::size_t src = size_value(j, "source_dim");
    const std::size_t tgt = size_value(j, "target_dim");
    const Json& rows = require(j, "rows");
    if (!rows.is_array() || rows.size() != tgt) throw ParseError("expected " + std::to_string(tgt) + " rows");
    std::vector<Vec> rs;
    for (const auto& r : rows) rs.push_back(coords_from_json(r, f, src));
    Matrix m(tgt, src);
    for (std::size_t i = 0; i < tgt; ++i)
      for (std::size_t k = 0; k < src; ++k) m(i, k) = rs[i][k];
    return LinearMap(m);
  });
}

Json to_json(const ShiftedLattice& l) {
  std::int64_t d = 0;
  for (const auto& b : l.basis_over_2pi) d = radicand_of(b.coords(), d);
  for (const auto& c : l.characters) d = radicand_of(c.coords(), d);
  Json j{{"field", field_json(d)}, {"basis_over_2pi", vectors_json(l.basis_over_2pi)}, {"multiplicity", l.multiplicity}};
  if (!l.characters.empty()) {
    Json chars = Json::array();
    for (const auto& c : l.characters) chars.push_back(to_json(c.coords()));
    j["characters"] = chars;
  }
  return j;
}

ShiftedLattice lattice_from_json(const Json& j, const FieldDescriptor& field) {
  return guarded("lattice", [&] {
    const FieldDescriptor f = document_field(j, field);
    const Json& basis = require(j, "basis_over_2pi");
    if (!basis.is_array()) throw ParseError("\"basis_over_2pi\" must be an array");
    ShiftedLattice l;
    l.basis_over_2pi = vectors_from_json(basis, f, basis.size());
    l.multiplicity = require(j, "multiplicity").get<std::int64_t>();
    if (l.multiplicity < 1) throw ParseError("multiplicity must be positive");
    if (j.contains("characters")) {
      for (const auto& c : j.at("characters")) l.characters.emplace_back(coords_from_json(c, f, basis.size()));
    }
    return l;
  });
}

Json to_json(const ScaledDensity& d) {
  return Json{{"value", d.value.to_string()},
              {"two_pi_power", d.two_pi_power},
              {"exact", to_json(d.value)},
              {"field", field_json(d.value.radicand())}};
}

ScaledDensity density_from_json(const Json& j, const FieldDescriptor& field) {
  return guarded("density", [&] {
    const FieldDescriptor f = document_field(j, field);
    ScaledDensity d;
    d.two_pi_power = require(j, "two_pi_power").get<int>();
    if (j.contains("exact")) {
      d.value = scalar_from_json(j.at("exact"), f);
    } else {
      d.value = scalar_from_json(require(j, "value"), f);
    }
    return d;
  });
}

Json to_json(const PolytopeClass& c) {
  std::int64_t d = 0;
  Json terms = Json::array();
  for (const auto& t : c.terms()) {
    d = radicand_of(std::span<const Scalar>(&t.coeff, 1), d);
    Json ps = Json::array();
    for (const auto& p : t.polytopes) {
      for (const auto& v : p.vertices()) d = radicand_of(v.coords(), d);
      Json pj = to_json(p);
      pj.erase("field");
      ps.push_back(pj);
    }
    Json coeff = t.coeff.is_rational() ? Json(t.coeff.to_string()) : to_json(t.coeff);
    terms.push_back(Json{{"coeff", coeff}, {"polytopes", ps}});
  }
  return Json{{"field", field_json(d)}, {"dim", c.ambient_dim()}, {"degree", c.degree()}, {"terms", terms}};
}

PolytopeClass class_from_json(const Json& j, const FieldDescriptor& field) {
  return guarded("class", [&] {
    const FieldDescriptor f = document_field(j, field);
    const std::size_t n = size_value(j, "dim");
    const std::size_t k = size_value(j, "degree");
    std::vector<PolytopeClass::Term> terms;
    for (const auto& t : require(j, "terms")) {
      PolytopeClass::Term term{scalar_from_json(require(t, "coeff"), f), {}};
      for (const auto& p : require(t, "polytopes")) term.polytopes.push_back(polytope_from_json(p, f));
      terms.push_back(std::move(term));
    }
    return PolytopeClass(n, k, std::move(terms));
  });
}

Json to_json(const ExpSum& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    terms.push_back(Json{{"coeff", {{"re", to_json(t.coeff.re)}, {"im", to_json(t.coeff.im)}}},
                         {"exponent", to_json(t.exponent.coords())}});
  }
  return Json{{"field", to_json(f.field())}, {"dim", f.ambient_dim()}, {"text", f.to_string()}, {"terms", terms}};
}

ExpSum expsum_from_json(const Json& j) {
  return guarded("exponential sum", [&] {
    const FieldDescriptor f = document_field(j, FieldDescriptor::rationals());
    const std::size_t n = size_value(j, "dim");
    if (!j.contains("terms")) return parse_expsum(require(j, "text").get<std::string>(), f, n);
    std::vector<ExpSum::Term> terms;
    for (const auto& t : j.at("terms")) {
      const Json& c = require(t, "coeff");
      terms.push_back({{scalar_from_json(require(c, "re"), f), scalar_from_json(require(c, "im"), f)},
                       Covector(coords_from_json(require(t, "exponent"), f, n))});
    }
    return ExpSum(n, f, std::move(terms));
  });
}

}  // namespace tropexp::io
