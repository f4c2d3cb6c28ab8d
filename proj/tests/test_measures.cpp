#include <gtest/gtest.h>

#include "innerforms/error.hpp"
#include "innerforms/measures.hpp"
#include "innerforms/sweeps.hpp"

using namespace innerforms;

namespace {

std::vector<Rational> rv(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

}  // namespace

TEST(Measures, ExactSqrtNormalizes) {
  const ExactConstant r8 = exact_sqrt(8);
  EXPECT_EQ(r8.coeff, 2);
  EXPECT_EQ(r8.radicand, 2);
  EXPECT_EQ(exact_sqrt(9), ExactConstant::rational(3));
  EXPECT_EQ(exact_sqrt(2) * exact_sqrt(2), ExactConstant::rational(2));
  EXPECT_EQ(exact_sqrt(6) * exact_sqrt(6).inverse(), ExactConstant::one());
}

TEST(Measures, SelfdualExamples) {
  EXPECT_EQ(selfdual_constant(FieldCase::RealSplit, 3), ExactConstant::one());
  EXPECT_EQ(selfdual_constant(FieldCase::Complex, 2), ExactConstant::rational(16));
  const ExactConstant na = selfdual_constant(FieldCase::NonArchimedean, 3);
  EXPECT_EQ(na.coeff, 1);
  EXPECT_EQ(na.disc_quarter_exp, -18);
}

TEST(Measures, VolKExamples) {
  for (long q : {2L, 3L, 5L}) EXPECT_EQ(vol_K({q, 1}, 1).coeff, Rational(q - 1, q));
  const ExactConstant v = vol_K({2, 1}, 2);
  EXPECT_EQ(v.coeff, Rational(3, 8));
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(vol_K({3, 2}, m).disc_quarter_exp, -2 * m * m);
}

TEST(Measures, GammaExamples) {
  for (auto c : {FieldCase::RealSplit, FieldCase::RealQuaternion, FieldCase::Complex, FieldCase::NonArchimedean}) {
    EXPECT_EQ(gamma(c, {4}), ExactConstant::one()) << field_case_name(c);
  }
  const ExactConstant pi = gamma(FieldCase::RealSplit, {1, 1});
  EXPECT_EQ(pi.coeff, 1);
  EXPECT_EQ(pi.radicand, 1);
  EXPECT_EQ(pi.pi_half_exp, 2);
  for (long q : {2L, 3L, 7L}) {
    const ExactConstant g = gamma(FieldCase::NonArchimedean, {1, 1}, {q, 1});
    EXPECT_EQ(g.coeff, Rational(q, q + 1));
    EXPECT_EQ(g.disc_quarter_exp, 2);
  }
}

TEST(Measures, GammaMatchesVolumeForm) {
  for (long d : {1L, 2L, 3L}) {
    for (int m = 1; m <= 5; ++m) {
      for (const auto& comp : compositions_of(m)) {
        EXPECT_EQ(gamma(FieldCase::NonArchimedean, comp, {5, d}), gamma_from_volumes(comp, {5, d}));
      }
    }
  }
}

TEST(Measures, TransitivityExamples) {
  for (auto c : {FieldCase::RealSplit, FieldCase::RealQuaternion, FieldCase::Complex, FieldCase::NonArchimedean}) {
    EXPECT_TRUE(gamma_transitive_check(c, {2, 1}, {{1, 1}, {1}}, {3, 1}));
    EXPECT_TRUE(gamma_transitive_check(c, {3, 2}, {{3}, {2}}, {3, 1}));
  }
  EXPECT_TRUE(gamma_transitive_check(FieldCase::RealQuaternion, {2, 2}, {{1, 1}, {2}}));
  try {
    gamma_transitive_check(FieldCase::RealSplit, {2, 1}, {{1, 1}, {2}});
    FAIL() << "expected not-nested";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNested);
  }
}

TEST(Measures, EmbeddingExamples) {
  EXPECT_EQ(iota_star({1, 1}, rv({3, 5})), rv({3, 5}));
  EXPECT_EQ(iota_star({2, 1}, rv({3, 5})), rv({3, 3, 5}));
  EXPECT_EQ(phi({1, 1, 1}, rv({1, 2, 3})), rv({1, 2, 3}));
  EXPECT_EQ(phi({2, 1}, rv({4, 5})), rv({2, 2, 5}));
  EXPECT_EQ(iota({2, 1}, rv({1, 2, 3})), rv({3, 3}));
  EXPECT_EQ(phi_star({2, 1}, rv({1, 2, 3})), rv({Rational(3, 2), 3}));
}

TEST(Measures, EmbeddingAdjunction) {
  const std::vector<int> comp{2, 1, 3};
  const auto x = rv({1, -2, Rational(1, 3), 4, 0, 5});
  const auto t = rv({Rational(1, 2), -1, 2});
  EXPECT_EQ(pairing(iota_star(comp, t), x), pairing(t, iota(comp, x)));
  EXPECT_EQ(iota(comp, phi(comp, t)), t);
}

TEST(Measures, CorootExamples) {
  EXPECT_EQ(coroot({1, 1}, rv({1, -1})), rv({1, -1}));
  const auto c = coroot({2, 1}, rv({1, -1}));
  EXPECT_EQ(c, rv({Rational(4, 3), Rational(-2, 3)}));
  EXPECT_EQ(pairing(c, rv({1, -1})), 2);
  try {
    coroot({1, 1, 1}, rv({1, 1, 0}));
    FAIL() << "expected not-a-root";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotARoot);
  }
}

TEST(Measures, UnitCubeExamples) {
  EXPECT_EQ(unit_cube_volume({1, 1, 1}), ExactConstant::one());
  EXPECT_EQ(unit_cube_volume({2, 2}), ExactConstant::rational(Rational(1, 2)));
  const ExactConstant half_root2 = unit_cube_volume({2, 1});
  EXPECT_EQ(half_root2.coeff, Rational(1, 2));
  EXPECT_EQ(half_root2.radicand, 2);
  EXPECT_EQ(half_root2.to_string(), "1/2·√2");
  const ExactConstant dual = dual_unit_cube_volume({2, 2});
  EXPECT_EQ(dual.coeff, Rational(1, 2));
  EXPECT_EQ(dual.pi_half_exp, -4);
}

TEST(Measures, RhoAndModulusExamples) {
  EXPECT_EQ(rho_P({3}, 1), rv({0}));
  EXPECT_EQ(rho_P({1, 1}, 1), rv({Rational(1, 2), Rational(-1, 2)}));
  EXPECT_EQ(rho_P({1, 1}, 2), rv({2, -2}));
  EXPECT_EQ(modulus_exponent(1, 1), 1);
  EXPECT_EQ(modulus_exponent(2, 2), 4);
  EXPECT_EQ(modulus_exponent(3, 1), 3);
  EXPECT_THROW(validate_composition({2, 0}), Error);
  EXPECT_THROW(validate_composition({}), Error);
}

TEST(Measures, FieldCaseNames) {
  for (auto c : {FieldCase::RealSplit, FieldCase::RealQuaternion, FieldCase::Complex, FieldCase::NonArchimedean}) {
    EXPECT_EQ(parse_field_case(field_case_name(c)), c);
  }
  EXPECT_THROW(parse_field_case("p-adic-ish"), Error);
}
