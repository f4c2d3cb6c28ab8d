#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "innerforms/cli.hpp"
#include "innerforms/sweeps.hpp"

using namespace innerforms;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;  // 0 means no time bound
  std::function<Outcome()> run;
};

Outcome from_reports(const std::vector<SweepReport>& reports) {
  Outcome out{true, ""};
  for (const auto& r : reports) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += r.name + " cases=" + std::to_string(r.cases) + " failures=" + std::to_string(r.failures);
    if (!r.summary.empty()) out.detail += " (" + r.summary + ")";
    if (!r.passed()) {
      out.passed = false;
      if (!r.first_failure.empty()) out.detail += " first=" + r.first_failure;
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome worked_example() {
  Json request = Json::parse(read_file(INNERFORMS_TEST_DATA "/worked_example.json"));
  const Response base = run_request(request.dump());
  const Json expected = Json::parse(R"({"3": true, "inf_1": false, "inf_2": false})");
  bool ok = base.exit_code == kExitOk && base.body.value("global", true) == false && base.body["per_place"] == expected;
  std::string detail = "response=" + base.body["per_place"].dump() + " global=" + base.body.value("global", Json()).dump();

  // Extra unramified finite places must report true as well, for several m.
  for (int m = 1; m <= 3; ++m) {
    Json r = request;
    Json& payload = r["payload"];
    const Json places = Json::parse(R"([{"label": "inf", "kind": "real"}, {"label": "3", "kind": "finite", "q": 3},
                                         {"label": "5", "kind": "finite", "q": 5}, {"label": "7", "kind": "finite", "q": 7}])");
    payload["split_class"]["algebra"] = {{"m", 2 * m}, {"field", {{"kind", "global"}, {"places", places}}}};
    payload["split_class"]["lambda"] = {{"T^2-2", {m}}};
    payload["target"]["m"] = m;
    payload["target"]["field"]["places"] = places;
    const Response resp = run_request(r.dump());
    const Json want = Json::parse(R"({"3": true, "5": true, "7": true, "inf_1": false, "inf_2": false})");
    const bool this_ok = resp.exit_code == kExitOk && resp.body["global"] == false && resp.body["per_place"] == want;
    if (!this_ok) detail += "; m=" + std::to_string(m) + " got " + resp.body.dump();
    ok = ok && this_ok;
  }
  return {ok, detail};
}

Outcome minor_lemma_literal() {
  const SweepReport r = sweep_minor_lemma(5, false);
  Outcome out = from_reports({r});
  return out;
}

}  // namespace

int main() {
  const Exec ex = Exec::Parallel;
  const std::vector<Criterion> criteria{
      {"C1", "worked transfer example", 1.0, worked_example},
      {"C2", "closure order vs rank oracle, n<=5", 60.0, [&] { return from_reports({sweep_closure_oracle(5, ex)}); }},
      {"C3", "generic induction oracle, n<=5, 20 trials", 0.0,
       [&] { return from_reports({sweep_induction_oracle(5, 20, ex)}); }},
      {"C4", "transfer commutes with induction, md<=8, d in {1,2,4}", 0.0,
       [&] {
         return from_reports({sweep_transfer_induction(8, {1, 2, 4}, ex), sweep_induced_transfer(8, {1, 2, 4}, ex)});
       }},
      {"C5", "local-global principle, 500 configurations", 0.0, [&] { return from_reports({sweep_local_global(500, ex)}); }},
      {"C6", "gamma transitivity, m<=6, four field cases", 10.0,
       [&] { return from_reports({sweep_gamma_transitivity(6, ex)}); }},
      {"C7", "vol(K) and self-dual constants, m<=6", 0.0, [&] { return from_reports({sweep_measure_constants(6, ex)}); }},
      {"C8", "truncation identities and compact support, m<=4", 0.0,
       [&] { return from_reports({sweep_arthur_identities(4, 1000, ex), sweep_arthur_support(4, 4, 50, ex)}); }},
      {"C9", "partition scaling lemma, |lambda|<=8, e<=4", 0.0,
       [&] { return from_reports({sweep_partition_lemma(8, 4, ex)}); }},
      {"C10", "0/1 minor lemma, <=5 columns, literal statement", 0.0, minor_lemma_literal},
      {"C11", "class enumeration counts, md<=8", 0.0, [&] { return from_reports({sweep_enumeration(8, ex)}); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o.passed = false;
      o.detail += "; over time budget";
    }
    if (!o.passed) ++failed;
    std::printf("%s %s: %s [%.2fs] %s\n", o.passed ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
