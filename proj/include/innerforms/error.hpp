#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace innerforms {

/// Stable machine codes; the CLI prints them verbatim, so never renumber or rename.
enum class ErrorCode {
  InvalidClass,
  MissingSplittingData,
  UnknownIrreducible,
  DegreeMismatch,
  InvalidCharpoly,
  AlgebraMismatch,
  CharpolyMismatch,
  MissingCoefficients,
  UnregisteredFactor,
  NotARoot,
  InvalidComposition,
  NotNested,
  InvalidArgument,
  ParseError,
  SchemaError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace innerforms
