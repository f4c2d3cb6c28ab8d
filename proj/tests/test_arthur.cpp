#include <gtest/gtest.h>

#include <random>

#include "innerforms/arthur.hpp"
#include "innerforms/error.hpp"

using namespace innerforms;

namespace {

A0Point pt(std::initializer_list<Rational> xs) { return A0Point(xs); }

}  // namespace

TEST(Arthur, ParabolicBasics) {
  EXPECT_EQ(StdParabolic::all(4).size(), 8U);
  EXPECT_EQ(StdParabolic::minimal(3).blocks(), 3);
  EXPECT_EQ(StdParabolic::group(3).blocks(), 1);
  const StdParabolic p = StdParabolic::from_composition({2, 1, 3});
  EXPECT_EQ(p.composition(), (std::vector<int>{2, 1, 3}));
  EXPECT_TRUE(StdParabolic::minimal(6).contained_in(p));
  EXPECT_TRUE(p.contained_in(StdParabolic::group(6)));
  EXPECT_FALSE(StdParabolic::group(6).contained_in(p));
  EXPECT_EQ(project(StdParabolic::from_composition({2, 1}), pt({1, 3, 5})), pt({2, 2, 5}));
}

TEST(Arthur, TauExamples) {
  const auto mn = StdParabolic::minimal(2);
  const auto g = StdParabolic::group(2);
  EXPECT_EQ(tau(mn, mn, pt({0, 1})), 1);
  EXPECT_EQ(tau(mn, g, pt({1, 0})), 1);
  EXPECT_EQ(tau(mn, g, pt({0, 1})), 0);
  EXPECT_THROW(tau(g, mn, pt({1, 0})), Error);
}

TEST(Arthur, TauHatExamples) {
  const auto mn3 = StdParabolic::minimal(3);
  EXPECT_EQ(tau_hat(mn3, mn3, pt({-4, 0, 1})), 1);
  EXPECT_EQ(tau_hat(mn3, StdParabolic::group(3), pt({2, -1, -1})), 1);
  std::mt19937_64 rng(5);
  const auto mn = StdParabolic::minimal(2);
  const auto g = StdParabolic::group(2);
  for (int i = 0; i < 200; ++i) {
    const A0Point x = random_point(rng, 2);
    EXPECT_EQ(tau_hat(mn, g, x), tau(mn, g, x));
  }
}

TEST(Arthur, SigmaExamples) {
  std::mt19937_64 rng(9);
  const auto mn2 = StdParabolic::minimal(2);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(sigma(mn2, mn2, random_point(rng, 2)), 0);
  for (int m = 2; m <= 4; ++m) {
    const auto g = StdParabolic::group(m);
    for (const auto& p : StdParabolic::all(m)) {
      for (int i = 0; i < 30; ++i) {
        const A0Point x = random_point(rng, m);
        EXPECT_EQ(sigma(p, g, x), tau(p, g, x));
      }
    }
  }
  const auto mn3 = StdParabolic::minimal(3);
  EXPECT_EQ(sigma(mn3, mn3, pt({2, -1, -1})), 0);
}

TEST(Arthur, GammaTruncExamples) {
  const auto mn = StdParabolic::minimal(2);
  EXPECT_EQ(gamma_trunc(mn, pt({Rational(1, 2), Rational(-1, 2)}), pt({1, -1})), 1);
  EXPECT_EQ(gamma_trunc(mn, pt({Rational(3, 2), Rational(-3, 2)}), pt({1, -1})), 0);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(gamma_trunc(mn, random_point(rng, 2), pt({0, 0})), 0);
}

TEST(Arthur, GammaTruncDependsOnProjectionOnly) {
  std::mt19937_64 rng(4);
  for (int m = 2; m <= 4; ++m) {
    for (const auto& p : StdParabolic::all(m)) {
      for (int i = 0; i < 40; ++i) {
        const A0Point x = random_point(rng, m);
        const A0Point y = random_point(rng, m);
        const A0Point px = project(p, x);
        if (!is_regular_pair(x, y) || !is_regular_pair(px, y)) continue;
        EXPECT_EQ(gamma_trunc(p, x, y), gamma_trunc(p, px, y));
      }
    }
  }
}

TEST(Arthur, InversionExamples) {
  const auto mn3 = StdParabolic::minimal(3);
  const auto far = inversion_sides(mn3, pt({-50, 0, 50}), pt({1, 0, -1}));
  EXPECT_EQ(far.lhs, 0);
  EXPECT_EQ(far.rhs, 0);
  const auto mn2 = StdParabolic::minimal(2);
  for (const A0Point& x : {pt({1, 0}), pt({0, 1}), pt({Rational(7, 3), -2})}) {
    const auto s = inversion_sides(mn2, x, pt({0, 0}));
    EXPECT_EQ(s.lhs, tau_hat(mn2, StdParabolic::group(2), x));
    EXPECT_TRUE(s.holds());
  }
}

TEST(ArthurProperty, InversionAndLanglandsAtRandomPoints) {
  std::mt19937_64 rng(77);
  for (int m = 1; m <= 4; ++m) {
    int checked = 0;
    while (checked < 300) {
      const A0Point x = random_point(rng, m);
      const A0Point y = random_point(rng, m);
      if (!is_regular_pair(x, y)) continue;
      ++checked;
      for (const auto& p : StdParabolic::all(m)) {
        EXPECT_TRUE(inversion_check(p, x, y));
        const int g = gamma_trunc(p, x, y);
        EXPECT_TRUE(g == 0 || g == 1 || g == -1);
        for (const auto& q : StdParabolic::all(m)) {
          if (!p.contained_in(q)) continue;
          EXPECT_EQ(langlands_sum(p, q, x), p == q ? 1 : 0);
        }
      }
    }
  }
}

TEST(Arthur, CompactSupportExamples) {
  const auto mn = StdParabolic::minimal(2);
  const auto r = compact_support_check(mn, pt({1, -1}), 200, 3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checked, 200);
  EXPECT_EQ(support_radius(pt({1, -1})), 4);
  const auto zero = compact_support_check(mn, pt({0, 0}), 100, 3, Rational(1, 10));
  EXPECT_TRUE(zero.passed());
  for (const auto& p : StdParabolic::all(3)) {
    const auto s = compact_support_check(p, pt({2, Rational(-1, 2), Rational(-3, 2)}), 100, 8);
    EXPECT_TRUE(s.passed());
  }
}

TEST(Arthur, RegularityDetectsWalls) {
  EXPECT_FALSE(is_regular(pt({1, 1})));
  EXPECT_TRUE(is_regular(pt({2, 1})));
  EXPECT_FALSE(is_regular(pt({2, -1, -1})));
}
