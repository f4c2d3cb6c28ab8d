#pragma once

#include <cstdint>
#include <string>

#include "innerforms/json_io.hpp"
#include "innerforms/sweeps.hpp"

namespace innerforms {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // selftest found a failing property
  kExitParse = 2,
  kExitSchema = 3,
  kExitDomain = 4,
};

struct CliOptions {
  std::uint64_t seed = 0x5eed;
  bool table = false;
};

struct Response {
  int exit_code = kExitOk;
  Json body;
};

/// Dispatches one verb on its payload; library errors become {"error": {"code", "message"}}.
Response run_verb(const std::string& verb, const Json& payload, const CliOptions& options = {});

/// Parses a {"verb", "payload"} document and dispatches it.
Response run_request(const std::string& text, const CliOptions& options = {});

/// Parses `payload_text` as JSON and dispatches `verb`.
Response run_text(const std::string& verb, const std::string& payload_text, const CliOptions& options = {});

struct SelftestOptions {
  Exec exec = Exec::Parallel;
  std::uint64_t seed = 0x5eed;
  ClosureFn closure = closure_leq;  // replaced by test harnesses to inject faults
};

/// Runs the property suite at desk scale; identical options give byte-identical reports.
Response selftest(const SelftestOptions& options = {});

/// JSON (two-space indent) or a two-column text table.
std::string render(const Response& r, bool table);

/// Error object for a code and message.
Json error_json(std::string_view code, const std::string& message);

}  // namespace innerforms
