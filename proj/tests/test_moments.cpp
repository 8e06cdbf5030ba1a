#include <betawalk/moments.hpp>
#include <betawalk/walk.hpp>

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace betawalk {
namespace {

const BetaParams kArcsine(HalfInt{1});
const BetaParams kUniform(HalfInt{2});

CoefficientVector coeffs(std::initializer_list<BigRational> c) { return CoefficientVector(std::vector<BigRational>(c)); }

TEST(Moments, ArcsineVariance) {
  // U = -cos(pi W): E[U^2] = 1/2
  EXPECT_EQ(moment_u2n(1, kArcsine), PiRational(make_rational(1, 2)));
  EXPECT_EQ(moment_u2n(2, kArcsine), PiRational(make_rational(3, 8)));
}

TEST(Moments, UniformMoments) {
  // U uniform on [-1,1]: E[U^(2n)] = 1/(2n+1)
  for (unsigned n = 1; n <= 30; ++n) EXPECT_EQ(moment_u2n(n, kUniform), PiRational(make_rational(1, 2 * n + 1)));
}

TEST(Moments, PochhammerRatioForm) {
  // Independent closed form: E[U^(2n)] = (1/2)_n / (p+1/2)_n.
  for (long d = 1; d <= 9; ++d) {
    const BetaParams beta(HalfInt{d});
    for (unsigned n = 1; n <= 12; ++n) {
      const BigRational expected =
          pochhammer(make_rational(1, 2), n) / pochhammer(beta.p().value() + make_rational(1, 2), n);
      ASSERT_EQ(moment_u2n(n, beta), PiRational(expected)) << "p=" << beta.str() << " n=" << n;
    }
  }
  EXPECT_TRUE(odd_moment_u(3, kArcsine).is_zero());
}

TEST(Master, DirectThreeTermEvaluation) {
  // n=1, k=1, c=[1], p=1: terms j=(2,0), (1,1), (0,2) give 1 - 2 + 4/3.
  EXPECT_EQ(lhs_master(1, coeffs({1}), kUniform), PiRational(make_rational(1, 3)));
  EXPECT_EQ(rhs_master(1, coeffs({1}), kUniform), PiRational(make_rational(1, 3)));
}

TEST(Master, SecondMomentOracle) {
  // E[(sum c_i U_i)^2] = sum c_i^2 / (2p+1)
  std::mt19937 gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BigRational> c(1 + gen() % 4);
    BigRational sq = 0;
    for (auto& x : c) {
      x = make_rational(1 + gen() % 9, 1 + gen() % 7);
      sq += x * x;
    }
    const BetaParams beta(HalfInt{static_cast<long>(1 + gen() % 6)});
    const CoefficientVector cv(c);
    const PiRational expected(sq / (2 * beta.p().value() + 1));
    ASSERT_EQ(lhs_master(1, cv, beta), expected);
    ASSERT_EQ(rhs_master(1, cv, beta), expected);
  }
}

TEST(Master, KnownValues) {
  EXPECT_EQ(lhs_master(2, CoefficientVector::uniform(3, make_rational(1, 3)), kArcsine),
            PiRational(make_rational(5, 72)));
  EXPECT_EQ(rhs_master(1, coeffs({make_rational(1, 2), make_rational(1, 3)}), BetaParams(HalfInt{3})),
            PiRational(make_rational(13, 144)));
}

TEST(Master, RandomizedEquality) {
  std::mt19937 gen(99);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 1 + gen() % 4;
    std::vector<BigRational> c(1 + gen() % 3);
    for (auto& x : c) x = make_rational(1 + gen() % 11, 1 + gen() % 13);
    const BetaParams beta(HalfInt{static_cast<long>(1 + gen() % 7)});
    const auto r = verify_master(n, CoefficientVector(c), beta);
    ASSERT_TRUE(r.verified) << "n=" << n << " c=" << CoefficientVector(c).str() << " p=" << beta.str();
    ASSERT_TRUE(r.lhs.is_rational());
  }
}

TEST(Master, ThreadCountDoesNotChangeResult) {
  const auto c = coeffs({make_rational(1, 2), make_rational(1, 3), make_rational(1, 5), make_rational(2, 7)});
  const BetaParams beta(HalfInt{3});
  const auto one = lhs_master(5, c, beta, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    EXPECT_EQ(lhs_master(5, c, beta, t), one);
    EXPECT_EQ(rhs_master(5, c, beta, t), one);
  }
}

TEST(Master, HomogeneityProperty) {
  // Scaling every c by lambda scales the moment by lambda^(2n).
  const auto c = coeffs({1, make_rational(2, 3)});
  for (unsigned n = 1; n <= 4; ++n) {
    const auto base = rhs_master(n, c, kUniform);
    const BigRational lambda = make_rational(5, 2);
    EXPECT_EQ(lhs_master(n, c.scaled(lambda), kUniform), PiRational(pow(lambda, 2 * static_cast<long>(n))) * base);
  }
}

TEST(Master, MomentWalkCorrespondence) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = 1; n <= 6; ++n)
      ASSERT_EQ(rhs_master(n, CoefficientVector::uniform(k, make_rational(1, k)), kArcsine),
                PiRational(return_probability(k, n)));
}

TEST(Master, FloatModeReport) {
  const auto r = verify_master(3, coeffs({1, 2}), kUniform, Mode::floating);
  ASSERT_TRUE(r.float_check.has_value());
  EXPECT_TRUE(r.verified);
  EXPECT_TRUE(r.lhs.is_zero());
  EXPECT_NEAR(r.float_check->lhs, to_double(rhs_master(3, coeffs({1, 2}), kUniform).coeff()), 1e-12);
}

TEST(Master, EqualCoefficientForm) {
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned n = 1; n <= 3; ++n) {
      const auto r = verify_equal_coeff_form(n, k, kArcsine);
      EXPECT_TRUE(r.verified);
      // c_j = 1: k^(2n) times the walk probability.
      EXPECT_EQ(r.rhs, PiRational(pow(BigRational(k), 2 * static_cast<long>(n)) * return_probability(k, n)));
    }
}

TEST(Master, InvalidInputs) {
  EXPECT_THROW(BetaParams(HalfInt{0}), std::domain_error);
  EXPECT_THROW(coeffs({1, 0}), std::invalid_argument);
  EXPECT_THROW(CoefficientVector(std::vector<BigRational>{}), std::invalid_argument);
  EXPECT_THROW(lhs_master(0, coeffs({1}), kArcsine), std::invalid_argument);
}

}  // namespace
}  // namespace betawalk
