#pragma once

#include <json.hpp>

#include "innerforms/arthur.hpp"
#include "innerforms/classes.hpp"
#include "innerforms/measures.hpp"

namespace innerforms {

using Json = nlohmann::json;

// Every reader throws Error(SchemaError) on a missing field or a wrong type.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const Place& p);
Place place_from_json(const Json& j);

Json to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

/// {"m", "field", "invariants"}; a missing field means ℚ with its real place "inf".
Json to_json(const CentralSimpleAlgebra& a);
CentralSimpleAlgebra algebra_from_json(const Json& j);

Json to_json(const IrreducibleSpec& p);
IrreducibleSpec irreducible_from_json(const Json& j);

Json to_json(const IrreducibleRegistry& reg);
/// Adds every entry of a JSON array to `reg`.
void registry_from_json(const Json& j, IrreducibleRegistry& reg);

Json to_json(const ConjClass& c);
/// {"algebra", "lambda"}; an "algebra" may be omitted when `default_algebra` is given.
ConjClass class_from_json(const Json& j, const CentralSimpleAlgebra* default_algebra = nullptr);

Json to_json(const CharPoly& f);
CharPoly charpoly_from_json(const Json& j);

Json to_json(const LeviShape& l);
LeviShape levi_from_json(const Json& j);

Json to_json(const CentralizerShape& s);
Json to_json(const LocalGlobalResult& r);
Json to_json(const ExactConstant& c);

Json to_json(const A0Point& x);
A0Point point_from_json(const Json& j);

std::vector<int> int_vector_from_json(const Json& j);

/// Field accessors raising SchemaError with the field name.
const Json& require_field(const Json& j, const char* name);
int require_int(const Json& j, const char* name);
std::string require_string(const Json& j, const char* name);

}  // namespace innerforms
