#pragma once

#include <string>
#include <vector>

#include "innerforms/rational.hpp"

namespace innerforms {

enum class FieldCase { RealSplit, RealQuaternion, Complex, NonArchimedean };

std::string_view field_case_name(FieldCase c);
FieldCase parse_field_case(std::string_view name);  // throws InvalidArgument

/// Exact value coeff · √radicand · π^{pi_half_exp/2} · N(Δ₁)^{disc_quarter_exp/4}.
/// The radicand is kept squarefree, so equal values compare equal structurally.
struct ExactConstant {
  Rational coeff = 1;
  BigInt radicand = 1;
  int pi_half_exp = 0;
  int disc_quarter_exp = 0;

  static ExactConstant one() { return {}; }
  static ExactConstant rational(Rational q) { return {std::move(q), 1, 0, 0}; }

  ExactConstant inverse() const;
  std::string to_string() const;

  friend ExactConstant operator*(const ExactConstant& a, const ExactConstant& b);
  friend bool operator==(const ExactConstant&, const ExactConstant&) = default;
};

/// √n as coeff·√radicand with the radicand squarefree.
ExactConstant exact_sqrt(const BigInt& n);

/// Parameters for a non-archimedean base: residue cardinality q and division index d.
struct LocalParams {
  long q = 2;
  long d = 1;
};

/// Scaling of the self-dual measure on g_m(F) against Lebesgue (archimedean) or vol(g(O_F)).
ExactConstant selfdual_constant(FieldCase c, int m);

/// vol(K; G(F)) = N(Δ₁)^{−m²/2} Π_{i=1}^m (1 − q^{−id}).
ExactConstant vol_K(const LocalParams& params, int m);

/// The closed form of γ(P) for the standard parabolic with block sizes `composition`.
ExactConstant gamma(FieldCase c, const std::vector<int>& composition, const LocalParams& params = {});

/// Non-archimedean γ recomputed as vol_K(m)^{−1} Π_i vol_K(m_i) · vol(n_P(O_F)).
ExactConstant gamma_from_volumes(const std::vector<int>& composition, const LocalParams& params);

/// γ(refined) == Π_j γ(inner_j) · γ(outer); NotNested when inner_j does not sum to outer_j.
bool gamma_transitive_check(FieldCase c, const std::vector<int>& outer, const std::vector<std::vector<int>>& inner,
                            const LocalParams& params = {});

/// a_0 -> a_M: block sums.
std::vector<Rational> iota(const std::vector<int>& composition, const std::vector<Rational>& x);
/// a_M* -> a_0*: each t_i repeated m_i times.
std::vector<Rational> iota_star(const std::vector<int>& composition, const std::vector<Rational>& t);
/// a_M -> a_0: t_i/m_i repeated m_i times.
std::vector<Rational> phi(const std::vector<int>& composition, const std::vector<Rational>& t);
/// a_0* -> a_M*: block averages.
std::vector<Rational> phi_star(const std::vector<int>& composition, const std::vector<Rational>& x);

Rational pairing(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// 2 m_i t_i / Σ_j m_j t_j²; NotARoot unless gamma = e_i − e_j.
std::vector<Rational> coroot(const std::vector<int>& composition, const std::vector<Rational>& gamma);

/// vol([0,1]^l; a_M) = Π m_i^{−1/2}.
ExactConstant unit_cube_volume(const std::vector<int>& composition);
/// (2π)^{−l} Π m_i^{1/2}, the volume of the dual unit cube.
ExactConstant dual_unit_cube_volume(const std::vector<int>& composition);

/// ½ Σ_{i<j} m_i m_j d² (e_i − e_j).
std::vector<Rational> rho_P(const std::vector<int>& composition, long d);

/// The exponent md of |ν| in dx = dX / |ν(x)|^{md}.
long modulus_exponent(long m, long d);

/// Throws InvalidComposition on an empty composition or a block < 1.
void validate_composition(const std::vector<int>& composition);

}  // namespace innerforms
