#include <gtest/gtest.h>

#include "innerforms/brauer.hpp"
#include "innerforms/error.hpp"

using namespace innerforms;

namespace {

FieldSpec q_with(std::vector<std::string> finite) {
  std::vector<Place> places{Place::real("inf")};
  for (const auto& f : finite) places.push_back(Place::finite(f, std::stol(f)));
  return FieldSpec::global(places);
}

IrreducibleSpec sqrt2() {
  IrreducibleSpec p = IrreducibleSpec::with_coeffs("T^2-2", {Rational(-2), Rational(0)});
  p.splitting = {{"3", {2}}, {"inf", {1, 1}}};
  return p;
}

}  // namespace

TEST(Rational, ParsingAndPrinting) {
  EXPECT_EQ(to_string(make_rational(2, 4)), "1/2");
  EXPECT_EQ(to_string(make_rational(3)), "3/1");
  EXPECT_EQ(to_string(make_rational(1, -3)), "-1/3");
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), make_rational(-7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("a/b"), Error);
  EXPECT_EQ(mod_one(make_rational(-1, 3)), make_rational(2, 3));
}

TEST(Brauer, IndexExamples) {
  EXPECT_EQ(index(BrauerClass::trivial(FieldSpec::rationals())), 1);
  const BrauerClass quaternion(q_with({"3"}), std::map<std::string, Rational>{{"3", Rational(1, 2)}, {"inf", Rational(1, 2)}});
  EXPECT_EQ(index(quaternion), 2);
  const BrauerClass cubic(q_with({"2", "3"}), std::map<std::string, Rational>{{"2", Rational(1, 3)}, {"3", Rational(2, 3)}});
  EXPECT_EQ(index(cubic), 3);
  EXPECT_EQ(index(LocalBrauerClass(Rational(3, 4))), 4);
}

TEST(Brauer, IndexRejectsInvalidClasses) {
  const BrauerClass bad_sum(q_with({"3"}), std::map<std::string, Rational>{{"3", Rational(1, 2)}});
  EXPECT_THROW(index(bad_sum), Error);
  const BrauerClass bad_real(q_with({"3"}), std::map<std::string, Rational>{{"3", Rational(2, 3)}, {"inf", Rational(1, 3)}});
  EXPECT_THROW(index(bad_real), Error);
  const FieldSpec with_complex = FieldSpec::global({Place::complex("c"), Place::finite("3", 3), Place::finite("5", 5)});
  const BrauerClass bad_complex(with_complex, std::map<std::string, Rational>{{"c", Rational(1, 2)}, {"3", Rational(1, 2)}});
  EXPECT_THROW(index(bad_complex), Error);
  try {
    index(bad_sum);
  } catch (const Error& e) {
    EXPECT_EQ(error_code_name(e.code()), "invalid-class");
  }
}

TEST(Brauer, RestrictInvariantExamples) {
  EXPECT_EQ(restrict_invariant(LocalBrauerClass(Rational(1, 2)), 2).invariant(), 0);
  EXPECT_EQ(restrict_invariant(LocalBrauerClass(Rational(1, 2)), 1).invariant(), Rational(1, 2));
  EXPECT_EQ(restrict_invariant(LocalBrauerClass(Rational(1, 3)), 2).invariant(), Rational(2, 3));
}

TEST(Brauer, LocalDeltaAndCapacityExamples) {
  for (int g = 1; g <= 7; ++g) EXPECT_EQ(local_delta(1, g), 1);
  EXPECT_EQ(local_delta(2, 2), 1);
  EXPECT_EQ(local_delta(4, 6), 2);
  EXPECT_EQ(capacity(2, 2), 2);
  EXPECT_EQ(capacity(1, 5), 1);
  EXPECT_EQ(capacity(6, 4), 2);
}

TEST(Brauer, GlobalDeltaExamples) {
  IrreducibleSpec any{"p", 3, {}, std::nullopt};
  EXPECT_EQ(global_delta(BrauerClass::trivial(FieldSpec::rationals()), any), 1);

  const BrauerClass b(q_with({"3"}), std::map<std::string, Rational>{{"3", Rational(1, 2)}, {"inf", Rational(1, 2)}});
  EXPECT_EQ(global_delta(b, sqrt2()), 2);

  const FieldSpec two_finite = FieldSpec::global({Place::finite("3", 3), Place::finite("5", 5)});
  const BrauerClass c(two_finite, std::map<std::string, Rational>{{"3", Rational(1, 2)}, {"5", Rational(1, 2)}});
  IrreducibleSpec quad{"q", 2, {{"3", {2}}, {"5", {2}}}, std::nullopt};
  EXPECT_EQ(global_delta(c, quad), 1);
}

TEST(Brauer, GlobalDeltaNeedsSplittingData) {
  const BrauerClass b(q_with({"3"}), std::map<std::string, Rational>{{"3", Rational(1, 2)}, {"inf", Rational(1, 2)}});
  IrreducibleSpec bare{"p", 2, {{"inf", {1, 1}}}, std::nullopt};
  try {
    global_delta(b, bare);
    FAIL() << "expected missing-splitting-data";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingSplittingData);
  }
}

TEST(BrauerProperty, DeltaTimesCapacityIsIndex) {
  for (long d = 1; d <= 50; ++d) {
    for (long g = 1; g <= 50; ++g) EXPECT_EQ(local_delta(d, g) * capacity(d, g), d);
  }
}

TEST(BrauerProperty, GlobalDeltaDegeneratesToLocalDelta) {
  for (int s = 1; s <= 6; ++s) {
    for (int r = 1; r < s; ++r) {
      for (int g = 1; g <= 6; ++g) {
        const FieldSpec one = FieldSpec::global({Place::finite("7", 7)});
        const BrauerClass b(one, std::map<std::string, Rational>{{"7", Rational(r, s)}});
        IrreducibleSpec p{"p", g, {{"7", {g}}}, std::nullopt};
        EXPECT_EQ(global_delta(b, p), local_delta(LocalBrauerClass(Rational(r, s)).index(), g));
      }
    }
  }
}

TEST(BrauerProperty, RestrictionComposes) {
  for (int s = 1; s <= 8; ++s) {
    for (int r = 0; r < s; ++r) {
      const LocalBrauerClass inv{Rational(r, s)};
      for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) EXPECT_EQ(restrict_invariant(restrict_invariant(inv, a), b), restrict_invariant(inv, a * b));
      }
    }
  }
}

TEST(BrauerProperty, IndexOneIffTrivial) {
  const FieldSpec f = FieldSpec::global({Place::finite("2", 2), Place::finite("3", 3), Place::finite("5", 5)});
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Rational ra(a, 4), rb(b, 4);
      ra.canonicalize();
      rb.canonicalize();
      const BrauerClass cls(f, std::map<std::string, Rational>{{"2", ra}, {"3", rb}, {"5", mod_one(-ra - rb)}});
      EXPECT_EQ(index(cls) == 1, cls.invariants().empty());
    }
  }
}

TEST(Brauer, IrreducibleValidation) {
  const FieldSpec f = q_with({"3"});
  IrreducibleSpec p = sqrt2();
  EXPECT_NO_THROW(p.validate(&f));
  IrreducibleSpec wrong_sum{"p", 2, {{"3", {1}}}, std::nullopt};
  EXPECT_THROW(wrong_sum.validate(&f), Error);
  IrreducibleSpec real_three{"p", 3, {{"inf", {3}}}, std::nullopt};
  EXPECT_THROW(real_three.validate(&f), Error);
}

TEST(Brauer, RegistryIsAppendOnly) {
  IrreducibleRegistry reg;
  reg.add(sqrt2());
  EXPECT_NO_THROW(reg.add(sqrt2()));
  IrreducibleSpec clash = sqrt2();
  clash.degree = 4;
  clash.coeffs.reset();
  EXPECT_THROW(reg.add(clash), Error);
  EXPECT_THROW(reg.get("nope"), Error);
}
