#include <gtest/gtest.h>

#include "sigcolor/bounds.hpp"
#include "sigcolor/error.hpp"

using namespace sigcolor;

namespace {

// mu by plain integer iteration; stops before overflow.
std::optional<unsigned> first_negative(long p, long q, unsigned limit) {
  __int128 mu = 2 * p - 4 * q;
  for (unsigned i = 0; i <= limit; ++i) {
    if (mu < 0) return i;
    mu = p - 3 * q + 21 * mu;
    if (mu > (__int128{1} << 100)) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

TEST(Bounds, ParameterRange) {
  EXPECT_NO_THROW(BoundParams(2, 1));
  EXPECT_NO_THROW(BoundParams(3, 1));  // ceil(5/2)
  EXPECT_THROW(BoundParams(4, 1), PreconditionError);
  EXPECT_THROW(BoundParams(3, 2), PreconditionError);
  EXPECT_THROW(BoundParams(0, 0), PreconditionError);
}

TEST(Bounds, ClosedFormMatchesIteration) {
  for (long q = 1; q <= 40; ++q) {
    for (long p = 2 * q; p <= (5 * q + 1) / 2; ++p) {
      const BoundParams bp(p, q);
      __int128 mu = 2 * p - 4 * q;
      for (unsigned i = 0; i < 12; ++i) {
        EXPECT_EQ(mu_bound(bp, i), Rational(static_cast<long>(mu)));
        EXPECT_EQ(mu_bound_recurrence(bp, i), Rational(static_cast<long>(mu)));
        mu = p - 3 * q + 21 * mu;
      }
    }
  }
}

TEST(Bounds, FirstInfeasibleIndex) {
  EXPECT_EQ(first_infeasible_index(BoundParams(2, 1)), 1U);
  EXPECT_EQ(first_infeasible_index(BoundParams(83, 41)), std::nullopt);
  EXPECT_EQ(first_infeasible_index(BoundParams(168, 83)), 2U);
  for (long q = 1; q <= 100; ++q) {
    for (long p = 2 * q; p <= (5 * q + 1) / 2; ++p) {
      const auto got = first_infeasible_index(BoundParams(p, q));
      EXPECT_EQ(got, first_negative(p, q, 60)) << p << "/" << q;
      EXPECT_EQ(got.has_value(), 41 * p < 83 * q) << p << "/" << q;
    }
  }
}

TEST(Bounds, UpperBoundOnMissingColors) {
  EXPECT_EQ(m_upper_bound(BoundParams(172, 85)), Integer(4));
  EXPECT_EQ(m_upper_bound(BoundParams(83, 41)), Integer(2));
}

TEST(Bounds, Thresholds) {
  // 21m >= 3q - p + m with m <= 2p - 4q gives 20(2p - 4q) >= 3q - p
  EXPECT_EQ(threshold_83_41(), Rational(83, 41));
  // 42(2p - 4q) >= 4q - p
  EXPECT_EQ(threshold_172_85(), Rational(4 + 42 * 4, 1 + 42 * 2));
  EXPECT_EQ(threshold_172_85(), Rational(172, 85));
  // a <= 5p - 10q and 3a/2 >= 11q - 5p
  EXPECT_EQ(threshold_52_25(), Rational(52, 25));
}

TEST(Bounds, CountingInequalities) {
  EXPECT_EQ(arboricity_counting_first().normal().to_string(), "-a + 5*p - 10*q");
  EXPECT_EQ(arboricity_counting_second().normal().to_string(), "3/2*a + 5*p - 11*q");
  EXPECT_TRUE(arboricity_counting_check(52, 25, 10, 10));
  EXPECT_FALSE(arboricity_counting_check(52, 25, 11, 10));
  EXPECT_FALSE(arboricity_counting_check(51, 25, 10, 10));
}

TEST(Bounds, LinearAlgebraHelpers) {
  const LinearExpr x = LinearExpr::var("x");
  const LinearExpr e = Rational(3) * x - LinearExpr::num(6);
  EXPECT_EQ(e.evaluate({{"x", Rational(2)}}), 0);
  EXPECT_THROW(e.evaluate({}), PreconditionError);
  const VariableBound b = isolate(Inequality{e, LinearExpr::num(0)}, "x");
  EXPECT_TRUE(b.lower);
  EXPECT_EQ(b.expr.constant, 2);
  EXPECT_THROW(isolate(Inequality{e, e}, "x"), PreconditionError);
  EXPECT_THROW(combine(b, b), PreconditionError);
  EXPECT_EQ((x - x).to_string(), "0");
}
