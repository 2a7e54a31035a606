#pragma once

#include <nlohmann/json.hpp>

#include "tropexp/chambers.hpp"
#include "tropexp/expsum.hpp"
#include "tropexp/fan.hpp"
#include "tropexp/polyring.hpp"
#include "tropexp/polytope.hpp"

namespace tropexp::io {

using Json = nlohmann::ordered_json;

// Every reader throws ParseError on malformed documents. Scalars are
// {"a": "p/q", "b": "r/s"}; readers also accept a bare rational string or
// integer. Irrational parts need a quadratic field, taken from the document's
// "field" entry or from the argument.

Json to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const Json& j);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const FieldDescriptor& field);

Json to_json(std::span<const Scalar> coords);
Vec coords_from_json(const Json& j, const FieldDescriptor& field, std::size_t dim);

Json to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j, const FieldDescriptor& field = {});

/// {"dim", "puredim", "cones": [{"rays", "lineality", "orient", "weight": {"i,j,..": scalar}}]};
/// weight keys are 1-based coordinate indices, "" for degree 0.
Json to_json(const TropicalFan& f);
TropicalFan fan_from_json(const Json& j, const FieldDescriptor& field = {});

Json to_json(const LinearMap& m);
LinearMap map_from_json(const Json& j, const FieldDescriptor& field = {});

Json to_json(const ShiftedLattice& l);
ShiftedLattice lattice_from_json(const Json& j, const FieldDescriptor& field = {});

/// {"value": display string, "exact": scalar, "two_pi_power": p}.
Json to_json(const ScaledDensity& d);
ScaledDensity density_from_json(const Json& j, const FieldDescriptor& field = {});

Json to_json(const PolytopeClass& c);
PolytopeClass class_from_json(const Json& j, const FieldDescriptor& field = {});

Json to_json(const ExpSum& f);
ExpSum expsum_from_json(const Json& j);

/// Radicand found in the document's "field" entry, or `fallback`.
FieldDescriptor document_field(const Json& j, const FieldDescriptor& fallback);

}  // namespace tropexp::io
