#include <betawalk/moments.hpp>
#include <betawalk/numeric.hpp>

#include <boost/math/special_functions/beta.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

namespace betawalk {
namespace {

// E[U^(2n)] for U = 2X-1, X ~ Be(p,p), straight from boost's beta function.
double boost_moment(unsigned n, double p) {
  return boost::math::beta(n + 0.5, p) / (boost::math::beta(p, p) * std::exp2(2 * p - 1));
}

TEST(CompensatedSum, RecoversSmallIncrements) {
  CompensatedSum<double> s;
  s += 1.0;
  for (int i = 0; i < 1000; ++i) s += 1e-16;
  s += -1.0;
  EXPECT_NEAR(s.value(), 1e-13, 1e-20);

  CompensatedSum<double> a, b;
  a += 1e20;
  b += 3.0;
  b += -1e20;
  a.merge(b);
  EXPECT_EQ(a.value(), 3.0);
}

TEST(LogGamma, MatchesStd) {
  for (double x : {0.3, 0.5, 1.0, 2.4, 7.5, 40.0}) EXPECT_NEAR(log_gamma(x), std::lgamma(x), 1e-13);
  EXPECT_THROW(log_gamma(0.0), std::domain_error);
}

TEST(CompareValues, ConditionScaledTolerance) {
  EXPECT_TRUE(compare_values(1.0, 1.0 + 1e-9, 100.0, 1e-10).passed);
  EXPECT_FALSE(compare_values(1.0, 1.0 + 1e-9, 1.0, 1e-10).passed);
  EXPECT_DOUBLE_EQ(compare_values(2.0, 1.0, 1.0, 1e-10).rel_diff, 0.5);
}

TEST(FloatMaster, OneDimensionAgainstBoostBeta) {
  for (double p : {0.3, 0.7, 1.0, 2.4, 5.25})
    for (unsigned n = 1; n <= 6; ++n) {
      const auto f = verify_master_float(n, std::vector<double>{1.0}, p);
      EXPECT_TRUE(f.passed) << p << " " << n;
      EXPECT_NEAR(f.rhs / boost_moment(n, p), 1.0, 1e-12) << p << " " << n;
    }
}

TEST(FloatMaster, TwoCoefficientsSecondMoment) {
  // (c1^2 + c2^2) / (2p+1)
  for (double p : {0.3, 0.7, 2.4}) {
    const auto f = verify_master_float(1, std::vector<double>{1.0, 2.0}, p);
    EXPECT_TRUE(f.passed);
    EXPECT_NEAR(f.rhs, 5.0 / (2 * p + 1), 1e-13);
  }
}

TEST(FloatMaster, AgreesWithExactAtHalfIntegers) {
  std::mt19937 gen(3);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 1 + gen() % 5;
    std::vector<BigRational> c(1 + gen() % 3);
    for (auto& x : c) x = make_rational(1 + gen() % 5, 1 + gen() % 4);
    const BetaParams beta(HalfInt{static_cast<long>(1 + gen() % 5)});
    const CoefficientVector cv(c);
    const double exact = to_double(rhs_master(n, cv, beta).coeff());
    const auto f = verify_master_float(n, cv.to_doubles(), beta.p().to_double());
    ASSERT_TRUE(f.passed);
    EXPECT_LE(std::fabs(f.lhs - exact) / exact, 1e-12);
    EXPECT_LE(std::fabs(f.rhs - exact) / exact, 1e-12);
  }
}

TEST(FloatMaster, ReportsConditionNumber) {
  const auto f = verify_master_float(6, std::vector<double>{1.0, 1.0, 1.0, 1.0}, 0.5);
  EXPECT_GT(f.condition_number, 1e3);
  EXPECT_TRUE(f.passed);
  EXPECT_THROW(verify_master_float(1, std::vector<double>{}, 0.5), std::invalid_argument);
  EXPECT_THROW(verify_master_float(1, std::vector<double>{1.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(verify_master_float(1, std::vector<double>{-1.0}, 0.5), std::invalid_argument);
}

TEST(Series, ExactTermsMatchDefinition) {
  // t_0 = 1/(n+1/2) for every variant.
  for (unsigned n = 0; n <= 3; ++n)
    for (auto v : {SeriesVariant::printed, SeriesVariant::over_k_factorial, SeriesVariant::over_k_factorial_squared})
      EXPECT_EQ(series402_term(n, 0, v), make_rational(2, 2 * n + 1));
  // printed, n=0, k=1: (1/2)^2 / ((1/2)(3/2)) = 1/3
  EXPECT_EQ(series402_term(0, 1, SeriesVariant::printed), make_rational(1, 3));
  EXPECT_EQ(series402_term(0, 2, SeriesVariant::over_k_factorial), make_rational(9, 16) / make_rational(15, 8) / 2);

  const auto s = evaluate_series402(2, SeriesVariant::over_k_factorial_squared);
  ASSERT_EQ(s.exact_terms.size(), 24u);
  for (std::size_t k = 0; k < s.exact_terms.size(); ++k) {
    const BigRational t = series402_term(2, k, SeriesVariant::over_k_factorial_squared);
    EXPECT_EQ(s.exact_terms[k], to_string(t));
    if (k < s.terms.size()) EXPECT_NEAR(s.terms[k] / to_double(t), 1.0, 1e-15);
  }
}

TEST(Series, PrintedVariantDiverges) {
  for (unsigned n = 0; n <= 5; ++n) {
    const auto s = evaluate_series402(n, SeriesVariant::printed);
    EXPECT_TRUE(s.diverged) << n;
    EXPECT_FALSE(s.converged);
    EXPECT_FALSE(s.matches_target);
    EXPECT_GT(s.last_term_ratio, 1.0);
  }
}

TEST(Series, KFactorialVariantMatchesTarget) {
  for (unsigned n = 0; n <= 4; ++n) {
    const auto s = evaluate_series402(n, SeriesVariant::over_k_factorial);
    EXPECT_FALSE(s.diverged);
    EXPECT_TRUE(s.matches_target) << "n=" << n << " limit=" << s.limit_estimate << " target=" << s.target;
  }
}

TEST(Series, KFactorialSquaredConvergesElsewhere) {
  for (unsigned n = 0; n <= 4; ++n) {
    const auto s = evaluate_series402(n, SeriesVariant::over_k_factorial_squared);
    EXPECT_TRUE(s.converged);
    EXPECT_FALSE(s.matches_target);
  }
}

TEST(Series, PartialSumsAreRunningTotals) {
  const auto s = evaluate_series402(1, SeriesVariant::over_k_factorial_squared);
  double running = 0;
  for (std::size_t k = 0; k < s.terms.size(); ++k) {
    running += s.terms[k];
    EXPECT_NEAR(s.partial_sums[k], running, 1e-15);
  }
  EXPECT_EQ(parse_series_variant("over-k-factorial"), SeriesVariant::over_k_factorial);
  EXPECT_THROW(parse_series_variant("nope"), std::invalid_argument);
}

}  // namespace
}  // namespace betawalk
