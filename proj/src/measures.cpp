#include "innerforms/measures.hpp"

#include <numeric>

#include "innerforms/error.hpp"

namespace innerforms {

namespace {

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Γ(k/2) as coeff · π^{half/2}.
struct HalfGamma {
  Rational coeff;
  int half = 0;
};

HalfGamma gamma_half_integer(long k) {
  if (k % 2 == 0) return {Rational(factorial(k / 2 - 1)), 0};
  const long n = (k - 1) / 2;
  BigInt denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 4, static_cast<unsigned long>(n));
  denom *= factorial(n);
  Rational c(factorial(2 * n), denom);
  c.canonicalize();
  return {c, 1};
}

Rational q_power_term(const LocalParams& p, long i) {
  BigInt qpow;
  mpz_ui_pow_ui(qpow.get_mpz_t(), static_cast<unsigned long>(p.q), static_cast<unsigned long>(i * p.d));
  return Rational(1) - Rational(1) / Rational(qpow);
}

long excess(const std::vector<int>& composition) {
  long m = 0;
  long squares = 0;
  for (int b : composition) {
    m += b;
    squares += static_cast<long>(b) * b;
  }
  return m * m - squares;
}

BigInt squarefree_part(BigInt n, BigInt& square_root_of_rest) {
  square_root_of_rest = 1;
  BigInt f = 2;
  while (f * f <= n) {
    while (n % (f * f) == 0) {
      n /= f * f;
      square_root_of_rest *= f;
    }
    f += 1;
  }
  return n;
}

void check_local_params(const LocalParams& p) {
  if (p.q < 2 || p.d < 1) throw Error(ErrorCode::InvalidArgument, "non-archimedean parameters need q >= 2 and d >= 1");
}

}  // namespace

std::string_view field_case_name(FieldCase c) {
  switch (c) {
    case FieldCase::RealSplit: return "real-split";
    case FieldCase::RealQuaternion: return "quaternion";
    case FieldCase::Complex: return "complex";
    case FieldCase::NonArchimedean: return "nonarch";
  }
  return "?";
}

FieldCase parse_field_case(std::string_view name) {
  if (name == "real-split" || name == "real") return FieldCase::RealSplit;
  if (name == "quaternion" || name == "real-quaternion") return FieldCase::RealQuaternion;
  if (name == "complex") return FieldCase::Complex;
  if (name == "nonarch" || name == "nonarchimedean") return FieldCase::NonArchimedean;
  throw Error(ErrorCode::InvalidArgument, "unknown field case '" + std::string(name) + "'");
}

ExactConstant exact_sqrt(const BigInt& n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "exact_sqrt needs a positive integer");
  BigInt outside;
  BigInt inside = squarefree_part(n, outside);
  return {Rational(outside), inside, 0, 0};
}

ExactConstant operator*(const ExactConstant& a, const ExactConstant& b) {
  ExactConstant r;
  ExactConstant root = exact_sqrt(a.radicand * b.radicand);
  r.coeff = a.coeff * b.coeff * root.coeff;
  r.radicand = root.radicand;
  r.pi_half_exp = a.pi_half_exp + b.pi_half_exp;
  r.disc_quarter_exp = a.disc_quarter_exp + b.disc_quarter_exp;
  return r;
}

ExactConstant ExactConstant::inverse() const {
  if (coeff == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  // 1/(c√r) = √r/(c r)
  return {Rational(1) / (coeff * Rational(radicand)), radicand, -pi_half_exp, -disc_quarter_exp};
}

std::string ExactConstant::to_string() const {
  std::string s = innerforms::to_string(coeff);
  if (radicand != 1) s += "·√" + radicand.get_str();
  if (pi_half_exp != 0) s += "·π^(" + std::to_string(pi_half_exp) + "/2)";
  if (disc_quarter_exp != 0) s += "·N(Δ₁)^(" + std::to_string(disc_quarter_exp) + "/4)";
  return s;
}

void validate_composition(const std::vector<int>& composition) {
  if (composition.empty()) throw Error(ErrorCode::InvalidComposition, "empty composition");
  for (int b : composition) {
    if (b < 1) throw Error(ErrorCode::InvalidComposition, "composition blocks must be >= 1");
  }
}

ExactConstant selfdual_constant(FieldCase c, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  switch (c) {
    case FieldCase::RealSplit:
    case FieldCase::RealQuaternion:
      return ExactConstant::one();
    case FieldCase::Complex: {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(m) * m);
      return ExactConstant::rational(Rational(p));
    }
    case FieldCase::NonArchimedean:
      return {1, 1, 0, -2 * m * m};
  }
  return ExactConstant::one();
}

ExactConstant vol_K(const LocalParams& params, int m) {
  check_local_params(params);
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  Rational v = 1;
  for (long i = 1; i <= m; ++i) v *= q_power_term(params, i);
  return {v, 1, 0, -2 * m * m};
}

ExactConstant gamma(FieldCase c, const std::vector<int>& composition, const LocalParams& params) {
  validate_composition(composition);
  const int m = std::accumulate(composition.begin(), composition.end(), 0);
  const long s = excess(composition);
  ExactConstant out;

  switch (c) {
    case FieldCase::RealSplit: {
      // π^{S/4} Π_j Π_{i≤m_j} Γ(i/2) / Π_{i≤m} Γ(i/2)
      out.pi_half_exp = static_cast<int>(s / 2);
      for (int b : composition) {
        for (long i = 1; i <= b; ++i) {
          HalfGamma g = gamma_half_integer(i);
          out.coeff *= g.coeff;
          out.pi_half_exp += g.half;
        }
      }
      for (long i = 1; i <= m; ++i) {
        HalfGamma g = gamma_half_integer(i);
        out.coeff /= g.coeff;
        out.pi_half_exp -= g.half;
      }
      break;
    }
    case FieldCase::RealQuaternion: {
      out.pi_half_exp = static_cast<int>(2 * s);
      for (int b : composition) {
        for (long i = 1; i <= b; ++i) out.coeff *= Rational(factorial(2 * i - 1));
      }
      for (long i = 1; i <= m; ++i) out.coeff /= Rational(factorial(2 * i - 1));
      break;
    }
    case FieldCase::Complex: {
      BigInt two_pow;
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(s / 2));
      out.coeff = Rational(two_pow);
      out.pi_half_exp = static_cast<int>(s);
      for (int b : composition) {
        for (long i = 1; i <= b; ++i) out.coeff *= Rational(factorial(i - 1));
      }
      for (long i = 1; i <= m; ++i) out.coeff /= Rational(factorial(i - 1));
      break;
    }
    case FieldCase::NonArchimedean: {
      check_local_params(params);
      out.disc_quarter_exp = static_cast<int>(s);
      for (int b : composition) {
        for (long i = 1; i <= b; ++i) out.coeff *= q_power_term(params, i);
      }
      for (long i = 1; i <= m; ++i) out.coeff /= q_power_term(params, i);
      break;
    }
  }
  return out;
}

ExactConstant gamma_from_volumes(const std::vector<int>& composition, const LocalParams& params) {
  validate_composition(composition);
  const int m = std::accumulate(composition.begin(), composition.end(), 0);
  ExactConstant out = vol_K(params, m).inverse();
  for (int b : composition) out = out * vol_K(params, b);
  ExactConstant nilradical;
  nilradical.disc_quarter_exp = static_cast<int>(-excess(composition));
  return out * nilradical;
}

bool gamma_transitive_check(FieldCase c, const std::vector<int>& outer, const std::vector<std::vector<int>>& inner,
                            const LocalParams& params) {
  validate_composition(outer);
  if (inner.size() != outer.size()) throw Error(ErrorCode::NotNested, "one inner composition per outer block is required");
  std::vector<int> refined;
  ExactConstant staged = gamma(c, outer, params);
  for (std::size_t j = 0; j < outer.size(); ++j) {
    validate_composition(inner[j]);
    if (std::accumulate(inner[j].begin(), inner[j].end(), 0) != outer[j]) {
      throw Error(ErrorCode::NotNested, "inner composition " + std::to_string(j) + " does not refine its block");
    }
    staged = staged * gamma(c, inner[j], params);
    refined.insert(refined.end(), inner[j].begin(), inner[j].end());
  }
  return gamma(c, refined, params) == staged;
}

namespace {
void require_length(const std::vector<int>& composition, std::size_t got, std::size_t want) {
  validate_composition(composition);
  if (got != want) throw Error(ErrorCode::InvalidArgument, "vector length does not match the composition");
}
std::size_t total(const std::vector<int>& composition) {
  return static_cast<std::size_t>(std::accumulate(composition.begin(), composition.end(), 0));
}
}  // namespace

std::vector<Rational> iota(const std::vector<int>& composition, const std::vector<Rational>& x) {
  require_length(composition, x.size(), total(composition));
  std::vector<Rational> out;
  std::size_t at = 0;
  for (int b : composition) {
    Rational sum = 0;
    for (int k = 0; k < b; ++k) sum += x[at++];
    out.push_back(sum);
  }
  return out;
}

std::vector<Rational> iota_star(const std::vector<int>& composition, const std::vector<Rational>& t) {
  require_length(composition, t.size(), composition.size());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < composition.size(); ++i) out.insert(out.end(), composition[i], t[i]);
  return out;
}

std::vector<Rational> phi(const std::vector<int>& composition, const std::vector<Rational>& t) {
  require_length(composition, t.size(), composition.size());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < composition.size(); ++i) out.insert(out.end(), composition[i], t[i] / composition[i]);
  return out;
}

std::vector<Rational> phi_star(const std::vector<int>& composition, const std::vector<Rational>& x) {
  std::vector<Rational> sums = iota(composition, x);
  for (std::size_t i = 0; i < sums.size(); ++i) sums[i] /= composition[i];
  return sums;
}

Rational pairing(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "pairing of vectors of different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rational> coroot(const std::vector<int>& composition, const std::vector<Rational>& gamma) {
  require_length(composition, gamma.size(), composition.size());
  int plus = 0;
  int minus = 0;
  for (const auto& t : gamma) {
    if (t == 1) ++plus;
    else if (t == -1) ++minus;
    else if (t != 0) throw Error(ErrorCode::NotARoot, "root coordinates must lie in {-1, 0, 1}");
  }
  if (plus != 1 || minus != 1) throw Error(ErrorCode::NotARoot, "a root of A_M is e_i - e_j with i != j");
  Rational norm = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) norm += composition[i] * gamma[i] * gamma[i];
  std::vector<Rational> out;
  for (std::size_t i = 0; i < gamma.size(); ++i) out.push_back(2 * composition[i] * gamma[i] / norm);
  return out;
}

ExactConstant unit_cube_volume(const std::vector<int>& composition) {
  validate_composition(composition);
  BigInt product = 1;
  for (int b : composition) product *= b;
  // P^{-1/2} = √P / P
  ExactConstant root = exact_sqrt(product);
  root.coeff /= Rational(product);
  return root;
}

ExactConstant dual_unit_cube_volume(const std::vector<int>& composition) {
  validate_composition(composition);
  BigInt product = 1;
  for (int b : composition) product *= b;
  ExactConstant root = exact_sqrt(product);
  const long l = static_cast<long>(composition.size());
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(l));
  root.coeff /= Rational(two_pow);
  root.pi_half_exp = static_cast<int>(-2 * l);
  return root;
}

std::vector<Rational> rho_P(const std::vector<int>& composition, long d) {
  validate_composition(composition);
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
  const std::size_t l = composition.size();
  std::vector<Rational> rho(l, Rational(0));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      Rational w(static_cast<long>(composition[i]) * composition[j] * d * d, 2);
      w.canonicalize();
      rho[i] += w;
      rho[j] -= w;
    }
  }
  return rho;
}

long modulus_exponent(long m, long d) {
  if (m < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "m and d must be >= 1");
  return m * d;
}

}  // namespace innerforms
