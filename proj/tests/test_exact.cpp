#include <betawalk/exact.hpp>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

namespace betawalk {
namespace {

double value_of(const PiRational& v) {
  return to_double(v.coeff()) * std::pow(std::numbers::pi, static_cast<double>(v.half_pi_pow()) / 2.0);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), BigRational(-4));
  EXPECT_EQ(parse_rational("7"), BigRational(7));
  EXPECT_EQ(to_string(make_rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(BigRational(5)), "5/1");
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("1 /2"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, Pow) {
  EXPECT_EQ(pow(make_rational(2, 3), 3), make_rational(8, 27));
  EXPECT_EQ(pow(make_rational(2, 3), -2), make_rational(9, 4));
  EXPECT_EQ(pow(make_rational(2, 3), 0), BigRational(1));
  EXPECT_EQ(pow(BigInt(3), 4ul), BigInt(81));
}

TEST(PiRational, CanonicalZeroAndProducts) {
  const PiRational zero(BigRational(0), 3);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero, PiRational());

  const auto sqrt_pi = PiRational::sqrt_pi_power(1);
  EXPECT_EQ(sqrt_pi * sqrt_pi, PiRational::sqrt_pi_power(2));
  EXPECT_EQ(PiRational::sqrt_pi_power(3) / sqrt_pi, PiRational::sqrt_pi_power(2));
  EXPECT_EQ(pow(sqrt_pi, 4), PiRational::sqrt_pi_power(4));
  EXPECT_EQ(PiRational(make_rational(1, 2), 2) + PiRational(make_rational(1, 3), 2), PiRational(make_rational(5, 6), 2));
  // Zero absorbs any power when added.
  EXPECT_EQ(PiRational() + sqrt_pi, sqrt_pi);
}

TEST(PiRational, MixedPowersAreRejected) {
  EXPECT_THROW(PiRational(1) + PiRational::sqrt_pi_power(1), std::domain_error);
  EXPECT_THROW(PiRational(1) / PiRational(), std::domain_error);
}

TEST(HalfInt, Construction) {
  EXPECT_EQ(HalfInt::from_rational(make_rational(3, 2)).doubled, 3);
  EXPECT_EQ(HalfInt::from_rational(BigRational(2)).doubled, 4);
  EXPECT_THROW(HalfInt::from_rational(make_rational(1, 3)), std::exception);
  EXPECT_EQ(HalfInt::half_odd(2).str(), "5/2");
  EXPECT_EQ(HalfInt::integer(3).str(), "3");
  EXPECT_FALSE(HalfInt{0}.positive());
}

TEST(Factorial, MatchesRunningProduct) {
  BigInt running = 1;
  for (unsigned long n = 0; n <= 300; ++n) {
    if (n > 0) running *= n;
    ASSERT_EQ(factorial(n), running) << n;
  }
}

TEST(Factorial, BeyondTheCacheCap) {
  FactorialTable small(10);
  EXPECT_EQ(small(25), factorial(25));
  EXPECT_LE(small.cached(), 10u);
}

TEST(Factorial, ConcurrentReadersAgree) {
  FactorialTable table;
  std::vector<BigInt> results(8);
  {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < 8; ++t)
      threads.emplace_back([&, t] { results[t] = table(400 + 3 * t); });
  }
  for (unsigned t = 0; t < 8; ++t) EXPECT_EQ(results[t], factorial(400 + 3 * t));
}

TEST(Binomial, PascalAndBounds) {
  for (long n = 1; n <= 60; ++n)
    for (long k = 1; k < n; ++k) ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(40, 20), BigInt("137846528820"));
}

TEST(Multinomial, EqualsProductOfBinomials) {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<unsigned> parts(1 + gen() % 5);
    unsigned n = 0;
    for (auto& p : parts) n += (p = gen() % 9);
    BigInt expected = 1;
    unsigned remaining = n;
    for (unsigned p : parts) {
      expected *= binomial(remaining, p);
      remaining -= p;
    }
    ASSERT_EQ(multinomial(n, parts), expected);
  }
  EXPECT_THROW(multinomial(5, std::vector<unsigned>{1, 2}), std::invalid_argument);
}

TEST(Pochhammer, Values) {
  EXPECT_EQ(pochhammer(make_rational(1, 2), 0), BigRational(1));
  EXPECT_EQ(pochhammer(make_rational(1, 2), 3), make_rational(15, 8));
  EXPECT_EQ(pochhammer(BigRational(1), 5), BigRational(120));
}

TEST(Gamma, HalfIntegerValues) {
  EXPECT_EQ(gamma_half(HalfInt{1}), PiRational::sqrt_pi_power(1));
  EXPECT_EQ(gamma_half(HalfInt{5}), PiRational(make_rational(3, 4), 1));
  EXPECT_EQ(gamma_half(HalfInt::integer(5)), PiRational(24));
  EXPECT_EQ(beta_half(HalfInt{1}, HalfInt{1}), PiRational::sqrt_pi_power(2));
  EXPECT_EQ(beta_half(HalfInt{2}, HalfInt{2}), PiRational(1));
}

TEST(Gamma, AgreesWithBoost) {
  for (long a = 1; a <= 40; ++a) {
    const double x = a / 2.0;
    EXPECT_NEAR(value_of(gamma_half(HalfInt{a})) / boost::math::tgamma(x), 1.0, 1e-13) << x;
    for (long b = 1; b <= 12; ++b)
      EXPECT_NEAR(value_of(beta_half(HalfInt{a}, HalfInt{b})) / boost::math::beta(x, b / 2.0), 1.0, 1e-13);
  }
}

TEST(Gamma, RecurrenceProperty) {
  // Gamma(a+1) = a Gamma(a)
  for (long d = 1; d <= 80; ++d) {
    const HalfInt a{d};
    ASSERT_EQ(gamma_half(a + 1), PiRational(a.value()) * gamma_half(a));
  }
}

}  // namespace
}  // namespace betawalk
