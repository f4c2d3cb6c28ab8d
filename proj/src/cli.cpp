#include "innerforms/cli.hpp"

#include <sstream>

#include "innerforms/arthur.hpp"
#include "innerforms/error.hpp"
#include "innerforms/measures.hpp"
#include "innerforms/split_oracle.hpp"

namespace innerforms {

namespace {

IrreducibleRegistry registry_of(const Json& payload) {
  IrreducibleRegistry reg;
  if (payload.contains("irreducibles")) registry_from_json(payload["irreducibles"], reg);
  return reg;
}

ConjClass checked_class(const Json& j, const IrreducibleRegistry& reg, const CentralSimpleAlgebra* alg = nullptr) {
  ConjClass c = class_from_json(j, alg);
  require_valid(c, reg);
  return c;
}

std::string optional_string(const Json& payload, const char* name, const std::string& fallback) {
  return payload.contains(name) ? require_string(payload, name) : fallback;
}

Json with_registry(Json body, const IrreducibleRegistry& reg) {
  body["irreducibles"] = to_json(reg);
  return body;
}

Json verb_classify(const Json& payload) {
  IrreducibleRegistry reg = registry_of(payload);
  if (payload.contains("charpoly")) {
    const CentralSimpleAlgebra alg = algebra_from_json(require_field(payload, "algebra"));
    const CharPoly f = charpoly_from_json(payload["charpoly"]);
    return with_registry({{"charpoly_valid", charpoly_valid(alg, f, reg)}, {"degree", alg.degree()}}, reg);
  }
  const ConjClass c = class_from_json(require_field(payload, "class"));
  const bool valid = validate_class(c, reg);
  Json out{{"valid", valid}, {"mass", mass(c, reg)}, {"degree", c.algebra.degree()}, {"index", c.algebra.index()}};
  if (valid) {
    out["charpoly"] = to_json(charpoly_of(c, reg));
    out["semisimple_part"] = to_json(semisimple_part(c));
    out["is_elliptic"] = is_elliptic(c);
    Json deltas = Json::object();
    for (const auto& [label, lam] : c.lambda) deltas[label] = c.algebra.delta(reg.get(label));
    out["delta"] = deltas;
  }
  return with_registry(out, reg);
}

Json verb_enumerate(const Json& payload) {
  IrreducibleRegistry reg = registry_of(payload);
  const CentralSimpleAlgebra alg = algebra_from_json(require_field(payload, "algebra"));
  std::vector<ConjClass> classes;
  if (payload.contains("charpoly")) {
    classes = enumerate_classes(alg, charpoly_from_json(payload["charpoly"]), reg);
  } else {
    std::vector<std::string> labels;
    for (const auto& l : require_field(payload, "labels")) labels.push_back(l.get<std::string>());
    classes = enumerate_all_classes(alg, labels, reg);
  }
  Json list = Json::array();
  for (const auto& c : classes) list.push_back(to_json(c));
  return with_registry({{"count", classes.size()}, {"classes", list}}, reg);
}

std::vector<ConjClass> blocks_from(const Json& payload, const LeviShape& levi, const IrreducibleRegistry& reg) {
  std::optional<CentralSimpleAlgebra> base;
  if (payload.contains("algebra")) base = algebra_from_json(payload["algebra"]);
  const Json& blocks = require_field(payload, "blocks");
  if (!blocks.is_array()) throw Error(ErrorCode::SchemaError, "'blocks' must be an array");
  if (blocks.size() != levi.blocks.size()) {
    throw Error(ErrorCode::AlgebraMismatch, "one block class per Levi block is required");
  }
  std::vector<ConjClass> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::optional<CentralSimpleAlgebra> alg;
    if (base) alg = base->with_capacity(levi.blocks[i]);
    out.push_back(checked_class(blocks[i], reg, alg ? &*alg : nullptr));
  }
  return out;
}

Json verb_induce(const Json& payload) {
  IrreducibleRegistry reg = registry_of(payload);
  const LeviShape levi = levi_from_json(require_field(payload, "levi"));
  const auto blocks = blocks_from(payload, levi, reg);
  return with_registry({{"class", to_json(induce(levi, blocks))}}, reg);
}

Json verb_centralizer(const Json& payload) {
  IrreducibleRegistry reg = registry_of(payload);
  const ConjClass c = checked_class(require_field(payload, "class"), reg);
  return with_registry({{"shape", to_json(centralizer_shape(c, reg))}, {"dim", centralizer_dim(c, reg)}}, reg);
}

Json verb_closure(const Json& payload) {
  IrreducibleRegistry reg = registry_of(payload);
  const ConjClass lhs = checked_class(require_field(payload, "lhs"), reg);
  const ConjClass rhs = checked_class(require_field(payload, "rhs"), reg);
  return with_registry({{"leq", closure_leq(lhs, rhs, reg)}, {"geq", closure_leq(rhs, lhs, reg)}}, reg);
}

Json verb_local_global(const Json& payload) {
  IrreducibleRegistry reg = registry_of(payload);
  const ConjClass split = checked_class(require_field(payload, "split_class"), reg);
  const CentralSimpleAlgebra target = algebra_from_json(require_field(payload, "target"));
  return with_registry(to_json(local_global_transfer(split, target, reg)), reg);
}

Json verb_transfer(const Json& payload) {
  IrreducibleRegistry reg = registry_of(payload);
  if (payload.contains("class")) {
    const ConjClass c = checked_class(payload["class"], reg);
    return with_registry({{"class", to_json(transfer_to_split(c, reg))}}, reg);
  }
  const ConjClass split = checked_class(require_field(payload, "split_class"), reg);
  const CentralSimpleAlgebra target = algebra_from_json(require_field(payload, "target"));
  Json out = Json::object();
  if (!target.brauer.is_local()) out = to_json(local_global_transfer(split, target, reg));
  const auto back = transfers_from_split(split, target, reg);
  out["transfers"] = back.has_value();
  if (back) out["class"] = to_json(*back);
  if (payload.contains("levi")) {
    const LeviShape levi = levi_from_json(payload["levi"]);
    out["levi_transfers"] = levi_transfers(levi, target);
  }
  return with_registry(out, reg);
}

Json verb_elliptic(const Json& payload) {
  IrreducibleRegistry reg = registry_of(payload);
  const ConjClass c = checked_class(require_field(payload, "class"), reg);
  const auto support = elliptic_support(c, reg);
  Json blocks = Json::array();
  for (const auto& b : support.blocks) blocks.push_back(to_json(b));
  return with_registry({{"is_elliptic", is_elliptic(c)},
                        {"levi", to_json(support.levi)},
                        {"blocks", blocks},
                        {"reinduced_matches", induce(support.levi, support.blocks) == c}},
                       reg);
}

LocalParams local_params(const Json& payload) {
  LocalParams p;
  p.q = require_int(payload, "q");
  p.d = payload.contains("d") ? require_int(payload, "d") : 1;
  return p;
}

Json constant_json(FieldCase c, const ExactConstant& value, const Json& payload) {
  if (c != FieldCase::NonArchimedean) {
    Json j{{"coeff", to_json(value.coeff)}, {"pi_half_exp", value.pi_half_exp}};
    if (value.radicand != 1) j["radicand"] = value.radicand.get_str();
    return j;
  }
  const LocalParams p = local_params(payload);
  Json j{{"value", to_json(value.coeff)}, {"q", p.q}, {"d", p.d}, {"disc_quarter_exp", value.disc_quarter_exp}};
  if (payload.contains("disc_exp")) {
    j["disc_p_exp"] = to_json(rational_from_json(payload["disc_exp"]) * make_rational(value.disc_quarter_exp, 4));
  }
  return j;
}

std::vector<Rational> rational_vector(const Json& j) { return point_from_json(j); }

Json vector_json(const std::vector<Rational>& v) { return to_json(v); }

Json verb_gamma(const Json& payload) {
  const std::string op = optional_string(payload, "op", "gamma");
  if (op == "coroot") {
    const auto comp = int_vector_from_json(require_field(payload, "composition"));
    return {{"coroot", vector_json(coroot(comp, rational_vector(require_field(payload, "root"))))}};
  }
  if (op == "rho") {
    const auto comp = int_vector_from_json(require_field(payload, "composition"));
    return {{"rho", vector_json(rho_P(comp, payload.contains("d") ? require_int(payload, "d") : 1))}};
  }
  if (op == "unit_cube") {
    const auto comp = int_vector_from_json(require_field(payload, "composition"));
    return {{"volume", to_json(unit_cube_volume(comp))}, {"dual_volume", to_json(dual_unit_cube_volume(comp))}};
  }
  if (op == "modulus") return {{"exponent", modulus_exponent(require_int(payload, "m"), require_int(payload, "d"))}};
  const FieldCase c = parse_field_case(require_string(payload, "case"));
  const LocalParams params = c == FieldCase::NonArchimedean ? local_params(payload) : LocalParams{};
  if (op == "selfdual") return constant_json(c, selfdual_constant(c, require_int(payload, "m")), payload);
  const auto comp = int_vector_from_json(require_field(payload, "composition"));
  if (op == "transitive") {
    std::vector<std::vector<int>> inner;
    for (const auto& r : require_field(payload, "refinement")) inner.push_back(int_vector_from_json(r));
    return {{"transitive", gamma_transitive_check(c, comp, inner, params)}};
  }
  if (op != "gamma") throw Error(ErrorCode::InvalidArgument, "unknown gamma op '" + op + "'");
  return constant_json(c, gamma(c, comp, params), payload);
}

Json verb_volk(const Json& payload) {
  const LocalParams params = local_params(payload);
  const int m = require_int(payload, "m");
  Json j = constant_json(FieldCase::NonArchimedean, vol_K(params, m), payload);
  j["selfdual_disc_quarter_exp"] = selfdual_constant(FieldCase::NonArchimedean, m).disc_quarter_exp;
  return j;
}

StdParabolic parabolic_of(const Json& payload, const char* name, int m) {
  if (!payload.contains(name)) return StdParabolic::group(m);
  const auto p = StdParabolic::from_composition(int_vector_from_json(payload[name]));
  if (p.m() != m) throw Error(ErrorCode::InvalidArgument, std::string(name) + " is not a parabolic of GL_" + std::to_string(m));
  return p;
}

Json report_json(const SweepReport& r) {
  Json j{{"name", r.name}, {"passed", r.passed()}, {"cases", r.cases}, {"failures", r.failures}, {"summary", r.summary}};
  if (!r.first_failure.empty()) j["counterexample"] = Json::parse(r.first_failure);
  return j;
}

Json verb_arthur(const Json& payload, const CliOptions& options) {
  const std::string op = require_string(payload, "op");
  if (op == "sweep") {
    const int max_m = payload.contains("max_m") ? require_int(payload, "max_m") : 4;
    const int points = payload.contains("points") ? require_int(payload, "points") : 1000;
    return report_json(sweep_arthur_identities(max_m, points, Exec::Parallel, options.seed));
  }
  const A0Point x = point_from_json(require_field(payload, "X"));
  const int m = static_cast<int>(x.size());
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "X must have at least one coordinate");
  const StdParabolic p1 = parabolic_of(payload, "P1", m);
  const StdParabolic p2 = parabolic_of(payload, "P2", m);
  if (op == "tau") return {{"value", tau(p1, p2, x)}};
  if (op == "tau_hat") return {{"value", tau_hat(p1, p2, x)}};
  if (op == "sigma") return {{"value", sigma(p1, p2, x)}};
  if (op == "langlands") return {{"value", langlands_sum(p1, p2, x)}};
  const A0Point y = payload.contains("Y") ? point_from_json(payload["Y"]) : A0Point(m, Rational(0));
  if (y.size() != x.size()) throw Error(ErrorCode::InvalidArgument, "X and Y differ in length");
  if (op == "gamma") return {{"value", gamma_trunc(p1, x, y)}};
  if (op == "inversion") {
    const auto sides = inversion_sides(p1, x, y);
    return {{"lhs", sides.lhs}, {"rhs", sides.rhs}, {"holds", sides.holds()}, {"regular", is_regular_pair(x, y)}};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arthur op '" + op + "'");
}

Json matrix_json(const RationalMatrix& m) { return m.to_strings(); }

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::SchemaError, "a matrix is a nonempty array of rows");
  const int n = static_cast<int>(j.size());
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) throw Error(ErrorCode::SchemaError, "matrix must be square");
    for (int k = 0; k < n; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json verb_oracle(const Json& payload, const CliOptions& options) {
  IrreducibleRegistry reg = registry_of(payload);
  const std::string op = require_string(payload, "op");
  if (op == "realize") {
    const ConjClass c = checked_class(require_field(payload, "class"), reg);
    return {{"matrix", matrix_json(realize(c, reg))}};
  }
  if (op == "class_of") {
    std::vector<std::string> hints;
    if (payload.contains("hints")) {
      for (const auto& h : payload["hints"]) hints.push_back(h.get<std::string>());
    }
    return with_registry({{"class", to_json(class_of(matrix_from_json(require_field(payload, "matrix")), reg, hints))}}, reg);
  }
  if (op == "closure") {
    const ConjClass lhs = checked_class(require_field(payload, "lhs"), reg);
    const ConjClass rhs = checked_class(require_field(payload, "rhs"), reg);
    return {{"oracle_leq", oracle_closure_leq(lhs, rhs, reg)}, {"closure_leq", closure_leq(lhs, rhs, reg)}};
  }
  if (op == "centralizer") {
    const ConjClass c = checked_class(require_field(payload, "class"), reg);
    return {{"oracle_dim", oracle_centralizer_dim(realize(c, reg))}, {"dim", centralizer_dim(c, reg)}};
  }
  if (op == "induction") {
    const LeviShape levi = levi_from_json(require_field(payload, "levi"));
    const auto blocks = blocks_from(payload, levi, reg);
    const int trials = payload.contains("trials") ? require_int(payload, "trials") : 20;
    const auto r = generic_induction_check(levi, blocks, trials, reg, options.seed);
    return with_registry({{"passed", r.passed},
                          {"predicted", to_json(r.predicted)},
                          {"maximal", to_json(r.maximal)},
                          {"trials", r.trials},
                          {"hits", r.hits}},
                         reg);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown oracle op '" + op + "'");
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kExitParse;
    case ErrorCode::SchemaError: return kExitSchema;
    default: return kExitDomain;
  }
}

}  // namespace

Json error_json(std::string_view code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

Response run_verb(const std::string& verb, const Json& payload, const CliOptions& options) {
  try {
    if (verb == "selftest") {
      SelftestOptions st;
      st.seed = options.seed;
      return selftest(st);
    }
    if (!payload.is_object()) throw Error(ErrorCode::SchemaError, "payload must be a JSON object");
    Json body;
    if (verb == "classify") body = verb_classify(payload);
    else if (verb == "enumerate") body = verb_enumerate(payload);
    else if (verb == "induce") body = verb_induce(payload);
    else if (verb == "centralizer") body = verb_centralizer(payload);
    else if (verb == "closure") body = verb_closure(payload);
    else if (verb == "transfer") body = verb_transfer(payload);
    else if (verb == "local-global") body = verb_local_global(payload);
    else if (verb == "elliptic") body = verb_elliptic(payload);
    else if (verb == "gamma") body = verb_gamma(payload);
    else if (verb == "volk") body = verb_volk(payload);
    else if (verb == "arthur") body = verb_arthur(payload, options);
    else if (verb == "oracle") body = verb_oracle(payload, options);
    else throw Error(ErrorCode::SchemaError, "unknown verb '" + verb + "'");
    return {kExitOk, body};
  } catch (const Error& e) {
    return {exit_code_for(e.code()), error_json(error_code_name(e.code()), e.what())};
  } catch (const nlohmann::json::exception& e) {
    return {kExitSchema, error_json(error_code_name(ErrorCode::SchemaError), e.what())};
  }
}

Response run_text(const std::string& verb, const std::string& payload_text, const CliOptions& options) {
  Json payload;
  if (verb != "selftest" || !payload_text.empty()) {
    try {
      payload = Json::parse(payload_text);
    } catch (const nlohmann::json::parse_error& e) {
      return {kExitParse, error_json(error_code_name(ErrorCode::ParseError), e.what())};
    }
  }
  return run_verb(verb, payload, options);
}

Response run_request(const std::string& text, const CliOptions& options) {
  Json request;
  try {
    request = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    return {kExitParse, error_json(error_code_name(ErrorCode::ParseError), e.what())};
  }
  if (!request.is_object() || !request.contains("verb") || !request["verb"].is_string()) {
    return {kExitSchema, error_json(error_code_name(ErrorCode::SchemaError), "a request is {\"verb\": ..., \"payload\": {...}}")};
  }
  const Json payload = request.contains("payload") ? request["payload"] : Json::object();
  return run_verb(request["verb"].get<std::string>(), payload, options);
}

Response selftest(const SelftestOptions& options) {
  const Exec ex = options.exec;
  const std::vector<SweepReport> reports{
      sweep_partition_lemma(8, 4, ex),
      sweep_closure_oracle(5, ex, options.closure),
      sweep_closure_order(6, ex),
      sweep_induction_oracle(5, 20, ex, options.seed),
      sweep_transfer_induction(8, {1, 2, 4}, ex),
      sweep_induced_transfer(8, {1, 2, 4}, ex),
      sweep_local_global(500, ex, options.seed),
      sweep_enumeration(8, ex),
      sweep_gamma_transitivity(6, ex),
      sweep_measure_constants(6, ex),
      sweep_arthur_identities(4, 250, ex, options.seed),
      sweep_arthur_support(4, 3, 40, ex, options.seed),
      sweep_minor_lemma(5, true),
      sweep_levi_divisibility(5, 10),
  };
  Json list = Json::array();
  bool all = true;
  for (const auto& r : reports) {
    list.push_back(report_json(r));
    all = all && r.passed();
  }
  return {all ? kExitOk : kExitFailed, {{"selftest", list}, {"passed", all}, {"seed", options.seed}}};
}

std::string render(const Response& r, bool table) {
  if (!table) return r.body.dump(2) + "\n";
  std::ostringstream out;
  auto cell = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (r.body.contains("selftest")) {
    for (const auto& row : r.body["selftest"]) {
      out << (row["passed"].get<bool>() ? "PASS  " : "FAIL  ") << row["name"].get<std::string>() << "  "
          << row["summary"].get<std::string>() << "\n";
      if (row.contains("counterexample")) out << "      counterexample: " << row["counterexample"].dump() << "\n";
    }
    return out.str();
  }
  std::size_t width = 0;
  for (const auto& [key, value] : r.body.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : r.body.items()) {
    if (key == "irreducibles") continue;
    out << key << std::string(width - key.size() + 2, ' ') << cell(value) << "\n";
  }
  return out.str();
}

}  // namespace innerforms
