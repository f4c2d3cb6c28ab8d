#include <gtest/gtest.h>

#include "innerforms/error.hpp"
#include "innerforms/split_oracle.hpp"
#include "innerforms/sweeps.hpp"

using namespace innerforms;

namespace {

ConjClass split_class(int n, PartitionMap lam) { return ConjClass(CentralSimpleAlgebra::split(n), std::move(lam)); }

RationalMatrix from_ints(const std::vector<std::vector<int>>& rows) {
  RationalMatrix x(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) x(i, j) = rows[i][j];
  }
  return x;
}

}  // namespace

TEST(Linalg, RankAndDeterminant) {
  EXPECT_EQ(rank(RationalMatrix::identity(4)), 4);
  EXPECT_EQ(rank(RationalMatrix::zero(3)), 0);
  EXPECT_EQ(rank(from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2);
  EXPECT_EQ(determinant_i64({{2, 1}, {1, 2}}), 3);
  EXPECT_EQ(determinant_i64({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(rank_i64({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), 3);
  const RationalMatrix k = kronecker(RationalMatrix::identity(2), from_ints({{0, 1}, {0, 0}}));
  EXPECT_EQ(k.rows(), 4);
  EXPECT_EQ(rank(k), 2);
}

TEST(SplitOracle, RealizeExamples) {
  const auto reg = standard_registry();
  EXPECT_EQ(realize(split_class(3, {{"T", Partition{1, 1, 1}}}), reg), RationalMatrix::zero(3));
  EXPECT_EQ(realize(split_class(2, {{"T", Partition{2}}}), reg), from_ints({{0, 1}, {0, 0}}));
  EXPECT_EQ(realize(split_class(2, {{"T^2-2", Partition{1}}}), reg), from_ints({{0, 2}, {1, 0}}));

  const FieldSpec f = FieldSpec::local(Place::finite("p", 3));
  const ConjClass nonsplit({1, BrauerClass(f, std::map<std::string, Rational>{{"p", Rational(1, 2)}})},
                           {{"T", Partition{1}}});
  EXPECT_THROW(realize(nonsplit, standard_registry(f)), Error);

  IrreducibleRegistry bare;
  bare.add(IrreducibleSpec{"q", 2, {}, std::nullopt});
  try {
    realize(split_class(2, {{"q", Partition{1}}}), bare);
    FAIL() << "expected missing-coefficients";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingCoefficients);
  }
}

TEST(SplitOracle, CompanionSquaresToTwo) {
  const auto reg = standard_registry();
  const RationalMatrix c = companion(reg.get("T^2-2"));
  EXPECT_EQ(c * c, Rational(2) * RationalMatrix::identity(2));
}

TEST(SplitOracle, ClassOfExamples) {
  const auto reg = standard_registry();
  EXPECT_EQ(class_of(RationalMatrix::zero(4), reg), split_class(4, {{"T", Partition{1, 1, 1, 1}}}));
  EXPECT_EQ(class_of(from_ints({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}), reg), split_class(3, {{"T", Partition{2, 1}}}));
  try {
    class_of(from_ints({{3, 0}, {0, 3}}), reg);
    FAIL() << "expected unregistered-factor";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnregisteredFactor);
  }
}

TEST(SplitOracle, RankPowExamples) {
  const auto reg = standard_registry();
  const IrreducibleSpec& t = reg.get("T");
  const RationalMatrix any = from_ints({{1, 2}, {3, 4}});
  EXPECT_EQ(rank_pow(any, t, 0), 2);
  EXPECT_EQ(rank_pow(any, reg.get("T^2-2"), 0), 2);
  EXPECT_EQ(rank_pow(jordan_block(t, 2), t, 1), 1);
  EXPECT_EQ(rank_pow(realize(split_class(4, {{"T", Partition{2, 2}}}), reg), t, 1), 2);
}

TEST(SplitOracle, ClosureExamples) {
  const auto reg = standard_registry();
  const ConjClass zero = split_class(4, {{"T", Partition{1, 1, 1, 1}}});
  const ConjClass regular = split_class(4, {{"T", Partition{4}}});
  const ConjClass a = split_class(4, {{"T", Partition{2, 2}}});
  const ConjClass b = split_class(4, {{"T", Partition{3, 1}}});
  EXPECT_TRUE(oracle_closure_leq(zero, regular, reg));
  EXPECT_TRUE(oracle_closure_leq(a, b, reg));
  EXPECT_FALSE(oracle_closure_leq(b, a, reg));
  EXPECT_TRUE(oracle_closure_leq(b, b, reg));
}

TEST(SplitOracle, GenericInductionExamples) {
  const auto reg = standard_registry();
  for (int n = 2; n <= 4; ++n) {
    std::vector<ConjClass> zeros(n, split_class(1, {{"T", Partition{1}}}));
    const auto r = generic_induction_check(LeviShape{std::vector<int>(n, 1)}, zeros, 20, reg);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.maximal.at("T"), Partition{n});
    EXPECT_GT(r.hits, 0);
  }
  const std::vector<ConjClass> blocks{split_class(2, {{"T", Partition{2}}}), split_class(2, {{"T", Partition{1, 1}}})};
  const auto r = generic_induction_check(LeviShape{{2, 2}}, blocks, 20, reg);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.maximal.at("T"), (Partition{3, 1}));

  const ConjClass single = split_class(3, {{"T", Partition{2, 1}}});
  const auto s = generic_induction_check(LeviShape{{3}}, {single}, 5, reg);
  EXPECT_TRUE(s.passed);
  EXPECT_EQ(s.maximal, single);
}

TEST(SplitOracle, Splitmix64IsDeterministic) {
  EXPECT_EQ(splitmix64(0), splitmix64(0));
  EXPECT_NE(splitmix64(0), splitmix64(1));
}

TEST(SplitOracleProperty, RoundTripUpToSix) {
  const auto reg = standard_registry();
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : enumerate_all_classes(CentralSimpleAlgebra::split(n), {"T", "T-1", "T^2-2"}, reg)) {
      EXPECT_EQ(class_of(realize(c, reg), reg), c);
    }
  }
}

TEST(SplitOracleProperty, CentralizerDimensionMatchesCommutant) {
  const auto reg = standard_registry();
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : enumerate_all_classes(CentralSimpleAlgebra::split(n), {"T", "T-1", "T^2-2"}, reg)) {
      EXPECT_EQ(centralizer_dim(c, reg), oracle_centralizer_dim(realize(c, reg)));
    }
  }
}
