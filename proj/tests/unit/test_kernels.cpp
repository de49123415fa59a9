#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "cohen/errors.hpp"
#include "cohen/kernels.hpp"
#include "oracles.hpp"

using namespace cohen;

namespace {

const std::vector<std::string> kTableNames = {"weyl",         "cos",        "sinc",      "standard",
                                              "antistandard", "p-function", "q-function"};

ThetaSeries random_theta_series(std::mt19937_64& rng, int order) {
  ThetaSeries s(order);
  for (int j = 0; j <= order; ++j) {
    if (rng() % 4 == 0) continue;
    s.set(j, oracle::random_scalar(rng, 2, false));
  }
  return s;
}

// Leibniz expansion over all permutations.
ThetaSeries brute_force_determinant(const std::vector<ThetaSeries>& a, int k, int order) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  ThetaSeries det(order);
  do {
    ThetaSeries term = ThetaSeries::one(order);
    bool zero = false;
    for (int r = 0; r < k && !zero; ++r) {
      const int idx = r - perm[r] + 1;
      if (idx < 0) {
        zero = true;
      } else {
        term = term * a[idx];
      }
    }
    if (zero) continue;
    int inversions = 0;
    for (int x = 0; x < k; ++x)
      for (int y = x + 1; y < k; ++y) inversions += perm[x] > perm[y];
    if (inversions % 2) {
      det -= term;
    } else {
      det += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST(Taylor, MatchesElementarySeries) {
  for (const Rational& lambda : {Rational(1), Rational(3, 2), Rational(1, 3)}) {
    const auto specs = KernelSpec::table(lambda);
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const auto expected = oracle::closed_form(kTableNames[i], 10, lambda);
      EXPECT_EQ(oracle::from_kernel_series(taylor(specs[i], 10)).c, expected.c) << kTableNames[i];
    }
  }
}

TEST(Taylor, KnownLowOrderCoefficients) {
  const KernelSeries cos = taylor(KernelSpec::rivier_cos(), 4);
  EXPECT_EQ(cos.coefficient(2, 2), ScalarSum(GaussianRational(Rational(-1, 8)), Grade{2, 0}));
  const KernelSeries sinc = taylor(KernelSpec::born_jordan_sinc(), 4);
  EXPECT_EQ(sinc.coefficient(2, 2), ScalarSum(GaussianRational(Rational(-1, 24)), Grade{2, 0}));
  const KernelSeries standard = taylor(KernelSpec::standard(), 2);
  EXPECT_EQ(standard.coefficient(1, 1), ScalarSum(GaussianRational(0, Rational(-1, 2)), Grade{1, 0}));
  const KernelSeries p = taylor(KernelSpec::sudarshan_p(2), 2);
  EXPECT_EQ(p.coefficient(0, 2), ScalarSum(GaussianRational(1), Grade{1, 0}));
  EXPECT_EQ(p.coefficient(2, 0), ScalarSum(GaussianRational(Rational(1, 16)), Grade{1, 0}));
  EXPECT_THROW(taylor(KernelSpec::weyl(), -1), OrderError);
}

TEST(Taylor, MarginalFlagsMatchData) {
  const auto specs = KernelSpec::table();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const KernelSeries s = taylor(specs[i], 8);
    EXPECT_EQ(specs[i].marginal(), i < 5) << kTableNames[i];
    EXPECT_EQ(s.marginal(), specs[i].marginal());
    EXPECT_EQ(s.data_satisfies_marginal_condition(), specs[i].marginal());
  }
}

TEST(InvertSeries, ProductIsOneAndMatchesGeometricSeries) {
  for (const auto& spec : KernelSpec::table(Rational(2, 3))) {
    const KernelSeries s = taylor(spec, 9);
    const KernelSeries t = invert_series(s);
    EXPECT_EQ(oracle::from_kernel_series(s * t).c, oracle::one(9).c) << spec.name();
    EXPECT_EQ(oracle::from_kernel_series(t).c, oracle::inverse(oracle::from_kernel_series(s)).c) << spec.name();
  }
  KernelSeries bad(2);
  bad.set(0, 0, ScalarSum(2));
  EXPECT_THROW(invert_series(bad), KernelError);
}

TEST(BandedDeterminant, MatchesLeibnizExpansion) {
  std::mt19937_64 rng(4242);
  const int order = 5;
  for (int k = 0; k <= 7; ++k) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<ThetaSeries> a;
      for (int n = 0; n <= k; ++n) a.push_back(random_theta_series(rng, order));
      EXPECT_EQ(banded_determinant(a, k), brute_force_determinant(a, k, order)) << "k=" << k;
    }
  }
}

TEST(BandedDeterminant, SmallCases) {
  std::mt19937_64 rng(1);
  std::vector<ThetaSeries> a;
  for (int n = 0; n <= 2; ++n) a.push_back(random_theta_series(rng, 4));
  EXPECT_EQ(banded_determinant(a, 0), ThetaSeries::one(4));
  EXPECT_EQ(banded_determinant(a, 1), a[1]);
  EXPECT_EQ(banded_determinant(a, 2), a[1] * a[1] - a[0] * a[2]);
  EXPECT_THROW(banded_determinant(a, 3), OrderError);
}

TEST(InverseTauDerivative, DeterminantRouteEqualsSeriesInversion) {
  const int order = 8;
  for (const auto& spec : KernelSpec::table()) {
    const KernelSeries s = taylor(spec, order);
    const KernelSeries t = invert_series(s);
    for (int k = 0; k <= order; ++k) {
      const ThetaSeries d = inverse_tau_derivative(s, k);
      ASSERT_EQ(d.order(), order - k);
      for (int j = 0; j <= order - k; ++j) {
        EXPECT_EQ(d.coefficient(j), t.coefficient(j, k) * ScalarSum(GaussianRational(factorial(k))))
            << spec.name() << " k=" << k << " j=" << j;
      }
    }
  }
}

TEST(InverseTauDerivative, ZerosAwayFromTheOriginAreHarmless) {
  // cos vanishes on theta tau hbar = pi, yet every derivative of 1/cos at tau = 0
  // is a finite polynomial in theta: 1/cos x = 1 + x^2/2 + 5 x^4/24 + ...
  const KernelSeries s = taylor(KernelSpec::rivier_cos(), 8);
  const ThetaSeries d2 = inverse_tau_derivative(s, 2);
  // d^2/dtau^2 at tau = 0: 2 * (1/2) (theta hbar / 2)^2 = theta^2 hbar^2 / 4
  EXPECT_EQ(d2.coefficient(2), ScalarSum(GaussianRational(Rational(1, 4)), Grade{2, 0}));
  const ThetaSeries d4 = inverse_tau_derivative(s, 4);
  // 4! * (5/24) (hbar/2)^4 theta^4 = 5/16 hbar^4 theta^4
  EXPECT_EQ(d4.coefficient(4), ScalarSum(GaussianRational(Rational(5, 16)), Grade{4, 0}));
  EXPECT_THROW(inverse_derivative_determinant(s, 9), OrderError);
}

TEST(Evaluate, ClosedForms) {
  const double hbar = 0.8;
  const double theta = 1.7;
  const double tau = -0.6;
  const double x = theta * tau * hbar / 2;
  EXPECT_DOUBLE_EQ(evaluate(KernelSpec::weyl(), theta, tau, hbar).real(), 1.0);
  EXPECT_NEAR(evaluate(KernelSpec::rivier_cos(), theta, tau, hbar).real(), std::cos(x), 1e-15);
  EXPECT_NEAR(evaluate(KernelSpec::born_jordan_sinc(), theta, tau, hbar).real(), std::sin(x) / x, 1e-15);
  EXPECT_NEAR(std::abs(evaluate(KernelSpec::standard(), theta, tau, hbar) - std::polar(1.0, -x)), 0, 1e-15);
  EXPECT_NEAR(std::abs(evaluate(KernelSpec::antistandard(), theta, tau, hbar) - std::polar(1.0, x)), 0, 1e-15);
  const double e = hbar / 4 * (tau * tau * 4 + theta * theta / 4);
  EXPECT_NEAR(evaluate(KernelSpec::sudarshan_p(2), theta, tau, hbar).real(), std::exp(e), 1e-13);
  EXPECT_NEAR(evaluate(KernelSpec::husimi_q(2), theta, tau, hbar).real(), std::exp(-e), 1e-15);
  EXPECT_NEAR(log_growth(KernelSpec::sudarshan_p(2), theta, tau, hbar), e, 1e-15);
  EXPECT_EQ(log_growth(KernelSpec::husimi_q(2), theta, tau, hbar), 0.0);
}

TEST(Evaluate, SincIsSmoothThroughTheSeriesBranch) {
  const auto sinc = KernelSpec::born_jordan_sinc();
  for (double x : {1e-9, 1e-6, 9.9e-5, 1.01e-4, 1e-3}) {
    const double v = evaluate(sinc, 2 * x, 1.0, 1.0).real();
    EXPECT_NEAR(v, 1 - x * x / 6 + std::pow(x, 4) / 120, 1e-16);
  }
  EXPECT_DOUBLE_EQ(evaluate(sinc, 0.0, 3.0, 1.0).real(), 1.0);
}

TEST(Evaluate, MarginalKernelsAreOneOnTheAxes) {
  const auto specs = KernelSpec::table();
  for (std::size_t i = 0; i < 5; ++i) {
    for (double v : {-3.0, -0.5, 0.0, 1.25, 10.0}) {
      EXPECT_NEAR(std::abs(evaluate(specs[i], 0.0, v, 1.0) - 1.0), 0, 1e-15);
      EXPECT_NEAR(std::abs(evaluate(specs[i], v, 0.0, 1.0) - 1.0), 0, 1e-15);
    }
  }
  // The Gaussian kernels only meet f = 1 at the origin.
  EXPECT_GT(std::abs(evaluate(specs[5], 0.0, 1.0, 1.0) - 1.0), 0.1);
  EXPECT_GT(std::abs(evaluate(specs[6], 1.0, 0.0, 1.0) - 1.0), 0.1);
}

TEST(Evaluate, AgreesWithTaylorSeriesNearTheOrigin) {
  const double hbar = 1.1;
  for (const auto& spec : KernelSpec::table(Rational(3, 4))) {
    const KernelSeries s = taylor(spec, 12);
    for (auto [theta, tau] : {std::pair{0.2, 0.3}, {-0.4, 0.1}, {0.25, -0.25}}) {
      std::complex<double> sum = 0;
      for (int d = 0; d <= 12; ++d)
        for (int k = 0; k <= d; ++k)
          sum += s.coefficient(d - k, k).evaluate(hbar) * std::pow(theta, d - k) * std::pow(tau, k);
      EXPECT_NEAR(std::abs(sum - evaluate(spec, theta, tau, hbar)), 0, 1e-10) << spec.name();
    }
  }
}

TEST(Evaluate, RejectsCustomAndBadArguments) {
  const auto custom = KernelSpec::custom(KernelSeries::one(2), true);
  EXPECT_THROW(evaluate(custom, 0, 0, 1), KernelError);
  EXPECT_THROW(log_growth(custom, 0, 0, 1), KernelError);
  EXPECT_THROW(evaluate(KernelSpec::weyl(), NAN, 0, 1), KernelError);
  EXPECT_THROW(evaluate(KernelSpec::weyl(), 0, 0, 0), KernelError);
}

TEST(ParseKernel, NamesAndAliases) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"weyl", "weyl"},         {"cos", "cos"},           {"rivier", "cos"},
      {"margenau-hill", "cos"}, {"sinc", "sinc"},         {"born-jordan", "sinc"},
      {"standard", "standard"}, {"kirkwood+", "standard"}, {"antistandard", "antistandard"},
      {"kirkwood-", "antistandard"}, {"p-function", "p-function"}, {"q-function", "q-function"},
  };
  for (const auto& [alias, name] : cases) EXPECT_EQ(parse_kernel(alias).name(), name) << alias;
  EXPECT_EQ(*parse_kernel("q-function", Rational(5, 2)).lambda(), Rational(5, 2));
  EXPECT_EQ(*parse_kernel("p-function").lambda(), Rational(1));
  EXPECT_THROW(parse_kernel("wigner"), KernelError);
  EXPECT_THROW(parse_kernel("cos", Rational(2)), KernelError);
  EXPECT_THROW(parse_kernel("p-function", Rational(0)), KernelError);
  EXPECT_THROW(parse_kernel("custom:/nonexistent/file"), KernelError);
}

TEST(CustomKernel, ReadsCoefficientFile) {
  std::istringstream in(
      "# f = 1 + i theta hbar / 3 - tau^2 hbar^2 / 2\n"
      "0 0 1/1 0/1 0\n"
      "1 0 0/1 1/3 1   # linear in theta\n"
      "\n"
      "0 2 -1/2 0/1 2\n");
  const KernelSeries s = read_custom_series(in);
  EXPECT_EQ(s.order(), 2);
  EXPECT_EQ(s.coefficient(1, 0), ScalarSum(GaussianRational(0, Rational(1, 3)), Grade{1, 0}));
  EXPECT_EQ(s.coefficient(0, 2), ScalarSum(GaussianRational(Rational(-1, 2)), Grade{2, 0}));
  EXPECT_FALSE(s.marginal());

  const KernelSpec exact = KernelSpec::custom(s, true);
  EXPECT_EQ(taylor(exact, 5).coefficient(0, 2), s.coefficient(0, 2));
  EXPECT_TRUE(taylor(exact, 5).coefficient(3, 2).is_zero());
  EXPECT_THROW(taylor(KernelSpec::custom(s, false), 3), OrderError);
}

TEST(CustomKernel, RejectsMalformedLines) {
  for (const char* text : {"0 0 1/1 0/1\n", "0 0 1/1 0/1 0 9\n", "a 0 1/1 0/1 0\n", "0 -1 1/1 0/1 0\n",
                           "0 0 1/0 0/1 0\n", "0 0 x 0/1 0\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_custom_series(in), KernelError) << text;
  }
  KernelSeries shifted(1);
  shifted.set(0, 0, ScalarSum(2));
  EXPECT_THROW(taylor(KernelSpec::custom(shifted, true), 1), KernelError);
}

TEST(CustomKernel, LoadsFromFile) {
  const std::string path = testing::TempDir() + "cohen_custom_kernel.txt";
  {
    std::ofstream out(path);
    out << "0 0 1/1 0/1 0\n1 1 0/1 -1/2 1\n";
  }
  const KernelSpec spec = parse_kernel("custom:" + path);
  EXPECT_EQ(spec.kind(), KernelKind::custom);
  EXPECT_TRUE(spec.marginal());
  EXPECT_EQ(taylor(spec, 2), taylor(KernelSpec::standard(), 2));
  std::remove(path.c_str());
}

TEST(Catalog, ListsTheTabulatedKernels) {
  const auto& catalog = kernel_catalog();
  ASSERT_EQ(catalog.size(), kTableNames.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    EXPECT_EQ(catalog[i].name, kTableNames[i]);
    EXPECT_EQ(KernelSpec::table()[i].name(), kTableNames[i]);
    for (const auto& alias : catalog[i].aliases) EXPECT_EQ(parse_kernel(alias).name(), kTableNames[i]);
  }
}
