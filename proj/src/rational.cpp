#include "innerforms/rational.hpp"

#include <numeric>

#include "innerforms/error.hpp"

namespace innerforms {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidClass: return "invalid-class";
    case ErrorCode::MissingSplittingData: return "missing-splitting-data";
    case ErrorCode::UnknownIrreducible: return "unknown-irreducible";
    case ErrorCode::DegreeMismatch: return "degree-mismatch";
    case ErrorCode::InvalidCharpoly: return "invalid-charpoly";
    case ErrorCode::AlgebraMismatch: return "algebra-mismatch";
    case ErrorCode::CharpolyMismatch: return "charpoly-mismatch";
    case ErrorCode::MissingCoefficients: return "missing-coefficients";
    case ErrorCode::UnregisteredFactor: return "unregistered-factor";
    case ErrorCode::NotARoot: return "not-a-root";
    case ErrorCode::InvalidComposition: return "invalid-composition";
    case ErrorCode::NotNested: return "not-nested";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::SchemaError: return "schema-error";
  }
  return "unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_int(num) || !check_int(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  BigInt n(num), d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational mod_one(const Rational& q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

BigInt denominator_of(const Rational& q) { return q.get_den(); }
BigInt numerator_of(const Rational& q) { return q.get_num(); }

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

long to_long(const BigInt& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "integer overflow: " + z.get_str());
  return z.get_si();
}

}  // namespace innerforms
