#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "innerforms/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy classes of inner forms of GL_n, transfer, induction, measure constants and Arthur cone functions"};
  std::string verb;
  std::string input;
  std::string format = "json";
  std::uint64_t seed = 0x5eed;

  app.add_option("verb", verb,
                 "run | selftest | classify | enumerate | induce | centralizer | closure | transfer | local-global | "
                 "elliptic | gamma | volk | arthur | oracle")
      ->required();
  app.add_option("input", input, "payload file (a {\"verb\",\"payload\"} request for 'run'); stdin when omitted or '-'");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", seed, "seed for sampling verbs");
  CLI11_PARSE(app, argc, argv);

  innerforms::CliOptions options;
  options.seed = seed;
  options.table = format == "table";

  innerforms::Response response;
  try {
    if (verb == "selftest") {
      innerforms::SelftestOptions st;
      st.seed = seed;
      response = innerforms::selftest(st);
    } else if (verb == "run") {
      response = innerforms::run_request(slurp(input), options);
    } else {
      response = innerforms::run_text(verb, slurp(input), options);
    }
  } catch (const std::exception& e) {
    response = {innerforms::kExitParse, innerforms::error_json("parse-error", e.what())};
  }
  std::cout << innerforms::render(response, options.table);
  return response.exit_code;
}
