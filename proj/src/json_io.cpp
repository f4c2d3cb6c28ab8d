#include "innerforms/json_io.hpp"

#include "innerforms/error.hpp"

namespace innerforms {

namespace {

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorCode::SchemaError, message); }

const Json& require_object(const Json& j, const char* what) {
  if (!j.is_object()) schema(std::string(what) + " must be an object");
  return j;
}

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  return j;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string_view kind_name(PlaceKind k) {
  switch (k) {
    case PlaceKind::Real: return "real";
    case PlaceKind::Complex: return "complex";
    case PlaceKind::Finite: return "finite";
  }
  return "finite";
}

}  // namespace

const Json& require_field(const Json& j, const char* name) {
  if (!j.is_object()) schema(std::string("expected an object holding '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) schema(std::string("missing field '") + name + "'");
  return *it;
}

int require_int(const Json& j, const char* name) { return as_int(require_field(j, name), name); }

std::string require_string(const Json& j, const char* name) {
  const Json& v = require_field(j, name);
  if (!v.is_string()) schema(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  schema("rationals are written as \"r/s\" strings or integers");
}

Json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  require_array(j, "a partition");
  std::vector<int> parts;
  for (const auto& v : j) {
    const int part = as_int(v, "a partition part");
    if (part < 1) schema("partition parts must be positive");
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

std::vector<int> int_vector_from_json(const Json& j) {
  require_array(j, "an integer list");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, "a list entry"));
  return out;
}

Json to_json(const Place& p) {
  Json j{{"label", p.label}, {"kind", kind_name(p.kind)}};
  if (p.kind == PlaceKind::Finite) {
    j["q"] = p.q;
    j["disc_exp"] = to_json(p.disc_exp);
  }
  return j;
}

Place place_from_json(const Json& j) {
  require_object(j, "a place");
  const std::string label = require_string(j, "label");
  const std::string kind = require_string(j, "kind");
  if (kind == "real") return Place::real(label);
  if (kind == "complex") return Place::complex(label);
  if (kind != "finite") schema("place kind must be finite, real or complex");
  Rational disc = 0;
  if (j.contains("disc_exp")) disc = rational_from_json(j["disc_exp"]);
  return Place::finite(label, require_int(j, "q"), disc);
}

Json to_json(const FieldSpec& f) {
  Json places = Json::array();
  for (const auto& p : f.places) places.push_back(to_json(p));
  return {{"kind", f.kind == FieldKind::Local ? "local" : "global"}, {"places", places}};
}

FieldSpec field_from_json(const Json& j) {
  require_object(j, "a field");
  const std::string kind = require_string(j, "kind");
  std::vector<Place> places;
  if (j.contains("place")) places.push_back(place_from_json(j["place"]));
  if (j.contains("places")) {
    for (const auto& p : require_array(j["places"], "places")) places.push_back(place_from_json(p));
  }
  FieldSpec f;
  if (kind == "local") {
    if (places.size() != 1) schema("a local field has exactly one place");
    f = FieldSpec::local(places.front());
  } else if (kind == "global") {
    if (places.empty()) schema("a global field lists at least one place");
    f = FieldSpec::global(std::move(places));
  } else {
    schema("field kind must be local or global");
  }
  f.validate();
  return f;
}

Json to_json(const CentralSimpleAlgebra& a) {
  Json inv = Json::object();
  for (const auto& [label, local] : a.brauer.invariants()) inv[label] = to_json(local.invariant());
  return {{"m", a.m}, {"field", to_json(a.brauer.base())}, {"invariants", inv}};
}

CentralSimpleAlgebra algebra_from_json(const Json& j) {
  require_object(j, "an algebra");
  const int m = require_int(j, "m");
  if (m < 1) schema("algebra capacity m must be >= 1");
  FieldSpec field = j.contains("field") ? field_from_json(j["field"]) : FieldSpec::rationals();
  std::map<std::string, Rational> invariants;
  if (j.contains("invariants")) {
    for (const auto& [label, value] : require_object(j["invariants"], "invariants").items()) {
      invariants[label] = rational_from_json(value);
    }
  }
  CentralSimpleAlgebra a{m, BrauerClass(std::move(field), invariants)};
  a.validate();
  return a;
}

Json to_json(const IrreducibleSpec& p) {
  Json splitting = Json::object();
  for (const auto& [place, degrees] : p.splitting) splitting[place] = degrees;
  Json j{{"label", p.label}, {"degree", p.degree}, {"splitting", splitting}};
  if (p.coeffs) {
    Json c = Json::array();
    for (const auto& q : *p.coeffs) c.push_back(to_json(q));
    j["coeffs"] = c;
  }
  return j;
}

IrreducibleSpec irreducible_from_json(const Json& j) {
  require_object(j, "an irreducible");
  IrreducibleSpec p;
  p.label = require_string(j, "label");
  if (j.contains("coeffs")) {
    std::vector<Rational> coeffs;
    for (const auto& c : require_array(j["coeffs"], "coeffs")) coeffs.push_back(rational_from_json(c));
    p = IrreducibleSpec::with_coeffs(p.label, std::move(coeffs));
    if (j.contains("degree") && as_int(j["degree"], "degree") != p.degree) schema("degree disagrees with coeffs");
  } else {
    p.degree = require_int(j, "degree");
  }
  if (j.contains("splitting")) {
    for (const auto& [place, degrees] : require_object(j["splitting"], "splitting").items()) {
      p.splitting[place] = int_vector_from_json(degrees);
    }
  }
  p.validate();
  return p;
}

Json to_json(const IrreducibleRegistry& reg) {
  Json out = Json::array();
  for (const auto& [label, spec] : reg.all()) out.push_back(to_json(spec));
  return out;
}

void registry_from_json(const Json& j, IrreducibleRegistry& reg) {
  for (const auto& entry : require_array(j, "irreducibles")) reg.add(irreducible_from_json(entry));
}

Json to_json(const ConjClass& c) {
  Json lam = Json::object();
  for (const auto& [label, part] : c.lambda) lam[label] = to_json(part);
  return {{"algebra", to_json(c.algebra)}, {"lambda", lam}};
}

ConjClass class_from_json(const Json& j, const CentralSimpleAlgebra* default_algebra) {
  require_object(j, "a class");
  CentralSimpleAlgebra alg;
  if (j.contains("algebra")) {
    alg = algebra_from_json(j["algebra"]);
  } else if (default_algebra != nullptr) {
    alg = *default_algebra;
  } else {
    schema("missing field 'algebra'");
  }
  PartitionMap lam;
  for (const auto& [label, part] : require_object(require_field(j, "lambda"), "lambda").items()) {
    Partition p = partition_from_json(part);
    if (!p.empty()) lam.emplace(label, std::move(p));
  }
  return ConjClass(std::move(alg), std::move(lam));
}

Json to_json(const CharPoly& f) {
  Json j = Json::object();
  for (const auto& [label, a] : f.factors) j[label] = a;
  return j;
}

CharPoly charpoly_from_json(const Json& j) {
  CharPoly f;
  for (const auto& [label, a] : require_object(j, "a characteristic polynomial").items()) {
    const int mult = as_int(a, "a multiplicity");
    if (mult < 0) schema("multiplicities must be nonnegative");
    if (mult > 0) f.factors[label] = mult;
  }
  return f;
}

Json to_json(const LeviShape& l) { return l.blocks; }

LeviShape levi_from_json(const Json& j) {
  LeviShape l{int_vector_from_json(j)};
  l.validate();
  return l;
}

Json to_json(const CentralizerShape& s) {
  Json out = Json::array();
  for (const auto& f : s.factors) {
    out.push_back({{"label", f.label},
                   {"center_degree", f.center_degree},
                   {"division_index", f.division_index},
                   {"block_size", f.block_size},
                   {"jordan_size", f.jordan_size}});
  }
  return out;
}

Json to_json(const LocalGlobalResult& r) {
  Json per = Json::object();
  for (const auto& [key, flag] : r.per_place) per[key] = flag;
  return {{"global", r.global},
          {"per_place", per},
          {"local_conjunction", r.local_conjunction()},
          {"principle_holds", r.principle_holds()}};
}

Json to_json(const ExactConstant& c) {
  Json j{{"coeff", to_json(c.coeff)}, {"pi_half_exp", c.pi_half_exp}, {"disc_quarter_exp", c.disc_quarter_exp}};
  if (c.radicand != 1) j["radicand"] = c.radicand.get_str();
  j["text"] = c.to_string();
  return j;
}

Json to_json(const A0Point& x) {
  Json out = Json::array();
  for (const auto& v : x) out.push_back(to_json(v));
  return out;
}

A0Point point_from_json(const Json& j) {
  A0Point x;
  for (const auto& v : require_array(j, "a point")) x.push_back(rational_from_json(v));
  return x;
}

}  // namespace innerforms
