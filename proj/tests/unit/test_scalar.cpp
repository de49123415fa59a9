#include <gtest/gtest.h>

#include <numbers>

#include "cohen/errors.hpp"
#include "cohen/scalar.hpp"

using namespace cohen;

TEST(GaussianRational, FieldOperations) {
  const GaussianRational a(Rational(1, 2), Rational(-3, 4));
  const GaussianRational b(Rational(2), Rational(5, 3));
  EXPECT_EQ(a + b, GaussianRational(Rational(5, 2), Rational(11, 12)));
  EXPECT_EQ(a - b, GaussianRational(Rational(-3, 2), Rational(-29, 12)));
  // (1/2 - 3i/4)(2 + 5i/3) = 1 + 5i/6 - 3i/2 + 5/4
  EXPECT_EQ(a * b, GaussianRational(Rational(9, 4), Rational(-2, 3)));
  EXPECT_EQ(a * a.reciprocal(), GaussianRational(1));
  EXPECT_EQ(a.conj(), GaussianRational(Rational(1, 2), Rational(3, 4)));
  EXPECT_THROW(GaussianRational().reciprocal(), DomainError);
}

TEST(GaussianRational, CanonicalizesFractions) {
  const GaussianRational a(Rational(6, 8), Rational(-10, 4));
  EXPECT_EQ(a.re().get_num(), 3);
  EXPECT_EQ(a.re().get_den(), 4);
  EXPECT_EQ(a.im(), Rational(-5, 2));
}

TEST(GaussianRational, PowersOfI) {
  EXPECT_EQ(i_pow(0), GaussianRational(1));
  EXPECT_EQ(i_pow(1), GaussianRational::i());
  EXPECT_EQ(i_pow(2), GaussianRational(-1));
  EXPECT_EQ(i_pow(3), GaussianRational(0, -1));
  EXPECT_EQ(i_pow(-1), GaussianRational(0, -1));
  EXPECT_EQ(i_pow(-6), GaussianRational(-1));
  EXPECT_EQ(i_pow(4001), GaussianRational::i());
}

TEST(ScalarSum, NeverStoresZeros) {
  ScalarSum s = ScalarSum::hbar(2) + ScalarSum(3);
  s -= ScalarSum::hbar(2);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s, ScalarSum(3));
  s -= ScalarSum(3);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s, ScalarSum{});
}

TEST(ScalarSum, GradesMultiplyAdditively) {
  const ScalarSum h = ScalarSum::planck();
  EXPECT_EQ(h.as_scalar()->grade, (Grade{1, 1}));
  const ScalarSum product = h * ScalarSum::hbar(-1) * h.reciprocal();
  EXPECT_EQ(product, ScalarSum::hbar(-1));
  EXPECT_TRUE((h * h.reciprocal()).is_one());
}

TEST(ScalarSum, MultiTermReciprocalIsRejected) {
  EXPECT_THROW((ScalarSum(1) + ScalarSum::hbar()).reciprocal(), DomainError);
  EXPECT_THROW(ScalarSum{}.reciprocal(), DomainError);
}

TEST(ScalarSum, EvaluatesHbarAndTwoPi) {
  const ScalarSum s = ScalarSum(GaussianRational(Rational(1, 2), 1), Grade{2, -1}) + ScalarSum(3);
  const std::complex<double> v = s.evaluate(0.5);
  const double scale = 0.25 / (2 * std::numbers::pi);
  EXPECT_NEAR(v.real(), 3 + 0.5 * scale, 1e-15);
  EXPECT_NEAR(v.imag(), scale, 1e-15);
}

TEST(Scalar, AdditionAcrossGradesIsADomainError) {
  const Scalar a{GaussianRational(1), {1, 0}};
  const Scalar b{GaussianRational(2), {1, 0}};
  const Scalar c{GaussianRational(2), {0, 0}};
  EXPECT_EQ(add_same_grade(a, b).value, GaussianRational(3));
  EXPECT_THROW(add_same_grade(a, c), DomainError);
}

TEST(Combinatorics, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), Rational("2432902008176640000"));
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  for (int n = 1; n < 30; ++n)
    for (int k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Rendering, RationalToString) {
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(7)), "7");
  EXPECT_EQ(to_string(Rational(0)), "0");
}
