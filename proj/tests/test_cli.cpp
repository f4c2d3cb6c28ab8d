#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "innerforms/cli.hpp"

using namespace innerforms;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kSplitGl4 = R"({"m": 4})";

Json class_json(const std::string& algebra, const std::string& lambda) {
  return Json{{"algebra", Json::parse(algebra)}, {"lambda", Json::parse(lambda)}};
}

Json std_irreducibles() {
  return Json::parse(R"([{"label": "T", "coeffs": ["0", "1"]},
                         {"label": "T-1", "coeffs": ["-1", "1"]},
                         {"label": "T^2-2", "coeffs": ["-2", "0", "1"]}])");
}

}  // namespace

TEST(Cli, WorkedTransferExample) {
  const Response r = run_request(read_file(INNERFORMS_TEST_DATA "/worked_example.json"));
  ASSERT_EQ(r.exit_code, kExitOk) << r.body.dump();
  EXPECT_EQ(r.body["global"], false);
  const Json expected = Json::parse(R"({"3": true, "inf_1": false, "inf_2": false})");
  EXPECT_EQ(r.body["per_place"], expected);
  EXPECT_EQ(r.body["transfers"], false);
}

TEST(Cli, GammaNonArchimedeanExample) {
  const Response r = run_text("gamma", R"({"case":"nonarch","q":3,"d":1,"disc_exp":0,"composition":[1,1]})");
  ASSERT_EQ(r.exit_code, kExitOk) << r.body.dump();
  EXPECT_EQ(r.body["value"], "3/4");
  EXPECT_EQ(r.body["disc_quarter_exp"], 2);
}

TEST(Cli, InduceFromWholeGroupIsIdentity) {
  Json payload{{"irreducibles", std_irreducibles()},
               {"levi", {4}},
               {"blocks", {class_json(kSplitGl4, R"({"T": [2, 1], "T-1": [1]})")}}};
  const Response r = run_verb("induce", payload);
  ASSERT_EQ(r.exit_code, kExitOk) << r.body.dump();
  EXPECT_EQ(r.body["class"]["lambda"], Json::parse(R"({"T": [2, 1], "T-1": [1]})"));
}

TEST(Cli, ClassifyRoundTrip) {
  Json payload{{"irreducibles", std_irreducibles()},
               {"levi", {2, 2}},
               {"blocks", {class_json(R"({"m": 2})", R"({"T": [2]})"), class_json(R"({"m": 2})", R"({"T": [1, 1]})")}}};
  const Response induced = run_verb("induce", payload);
  ASSERT_EQ(induced.exit_code, kExitOk);
  const Response back = run_verb("classify", Json{{"irreducibles", induced.body["irreducibles"]}, {"class", induced.body["class"]}});
  ASSERT_EQ(back.exit_code, kExitOk) << back.body.dump();
  EXPECT_EQ(back.body["valid"], true);
  EXPECT_EQ(back.body["charpoly"], Json::parse(R"({"T": 4})"));
}

TEST(Cli, ErrorCodes) {
  const Response parse = run_text("classify", "{not json");
  EXPECT_EQ(parse.exit_code, kExitParse);
  EXPECT_EQ(parse.body["error"]["code"], "parse-error");

  const Response schema = run_text("classify", R"({"class": {"lambda": 3}})");
  EXPECT_EQ(schema.exit_code, kExitSchema);
  EXPECT_EQ(schema.body["error"]["code"], "schema-error");

  Json mismatch{{"irreducibles", std_irreducibles()},
                {"lhs", class_json(R"({"m": 2})", R"({"T": [2]})")},
                {"rhs", class_json(R"({"m": 2})", R"({"T-1": [2]})")}};
  const Response domain = run_verb("closure", mismatch);
  EXPECT_EQ(domain.exit_code, kExitDomain);
  EXPECT_EQ(domain.body["error"]["code"], "charpoly-mismatch");

  const Response unknown = run_verb("nonsense", Json::object());
  EXPECT_NE(unknown.exit_code, kExitOk);
  EXPECT_TRUE(unknown.body.contains("error"));

  const Response bad_request = run_request(R"({"payload": {}})");
  EXPECT_EQ(bad_request.exit_code, kExitSchema);
}

TEST(Cli, OutputIsDeterministic) {
  const std::string text = read_file(INNERFORMS_TEST_DATA "/worked_example.json");
  EXPECT_EQ(render(run_request(text), false), render(run_request(text), false));
  const std::string arthur = R"({"op": "sweep", "max_m": 3, "points": 50})";
  EXPECT_EQ(render(run_text("arthur", arthur), false), render(run_text("arthur", arthur), false));
}

TEST(Cli, OracleAgreesWithClosure) {
  Json payload{{"irreducibles", std_irreducibles()},
               {"op", "closure"},
               {"lhs", class_json(kSplitGl4, R"({"T": [2, 2]})")},
               {"rhs", class_json(kSplitGl4, R"({"T": [3, 1]})")}};
  const Response r = run_verb("oracle", payload);
  ASSERT_EQ(r.exit_code, kExitOk) << r.body.dump();
  EXPECT_EQ(r.body["oracle_leq"], true);
  EXPECT_EQ(r.body["closure_leq"], true);
}

TEST(Cli, TableRendering) {
  const Response r = run_text("gamma", R"({"case":"real-split","composition":[1,1]})");
  const std::string table = render(r, true);
  EXPECT_NE(table.find("pi_half_exp"), std::string::npos);
  EXPECT_EQ(table.find('{'), std::string::npos);
}

TEST(Selftest, MutatedClosureReportsTheFailingPair) {
  SelftestOptions options;
  options.closure = [](const ConjClass& a, const ConjClass& b, const IrreducibleRegistry& reg) {
    return !closure_leq(a, b, reg) || a == b;
  };
  const Response r = selftest(options);
  EXPECT_EQ(r.exit_code, kExitFailed);
  EXPECT_EQ(r.body["passed"], false);
  bool found = false;
  for (const auto& row : r.body["selftest"]) {
    if (row["passed"] == false) {
      found = true;
      EXPECT_TRUE(row.contains("counterexample"));
      EXPECT_TRUE(row["counterexample"].contains("lhs"));
      EXPECT_TRUE(row["counterexample"].contains("rhs"));
    }
  }
  EXPECT_TRUE(found);
}

TEST(Selftest, FreshRunPassesAndIsByteIdentical) {
  const Response a = selftest();
  const Response b = selftest();
  EXPECT_EQ(a.exit_code, kExitOk) << render(a, true);
  EXPECT_EQ(render(a, false), render(b, false));
}
