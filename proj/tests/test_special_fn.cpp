#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <boost/math/special_functions/laguerre.hpp>
#include <gtest/gtest.h>

#include "dunkl/errors.hpp"
#include "dunkl/special_fn.hpp"

using namespace dunkl;
using namespace dunkl::special;

namespace {

// Brute-force Pochhammer sum of the terminating series in 50-digit arithmetic.
double kummer_brute(int n, double b, double y) {
  using big = boost::multiprecision::cpp_bin_float_50;
  big sum = 0, term = 1;
  for (int k = 0; k <= n; ++k) {
    sum += term;
    term *= big(-n + k) / (big(b) + k) * big(y) / (k + 1);
  }
  return static_cast<double>(sum);
}

}  // namespace

TEST(KummerM, ValueAtOriginIsOne) { EXPECT_EQ(kummer_m(-1.0, 2.0, 0.0), 1.0); }

TEST(KummerM, LinearTerminatingSeries) { EXPECT_NEAR(kummer_m(-1.0, 2.0, 4.0), -1.0, 1e-15); }

TEST(KummerM, QuadraticTerminatingSeries) {
  EXPECT_NEAR(kummer_m(-2.0, 1.5, 1.0), 1.0 - 4.0 / 3.0 + 2.0 / 7.5, 1e-15);
  EXPECT_NEAR(kummer_m(-2.0, 1.5, 1.0), -0.0667, 5e-5);
}

TEST(KummerM, TerminatingMatchesBruteForceSum) {
  for (int n : {0, 1, 3, 7, 12})
    for (double b : {0.5, 1.0, 1.5, 3.25})
      for (double y : {0.1, 1.0, 4.0, 9.0}) {
        const double ref = kummer_brute(n, b, y);
        EXPECT_NEAR(kummer_m(-n, b, y), ref, 1e-12 * std::max(1.0, std::abs(ref))) << n << ' ' << b << ' ' << y;
      }
}

TEST(KummerM, NonTerminatingMatchesIndependentLibrary) {
  for (double a : {0.5, -1.5, 2.25})
    for (double b : {0.75, 1.5, 4.0})
      for (double y : {0.0, 0.3, 2.0, 10.0}) {
        const double ref = boost::math::hypergeometric_1F1(a, b, y);
        EXPECT_NEAR(kummer_m(a, b, y), ref, 1e-12 * std::max(1.0, std::abs(ref))) << a << ' ' << b << ' ' << y;
      }
}

TEST(KummerM, ExponentialSpecialCase) {
  // M(a, a; y) = e^y.
  EXPECT_NEAR(kummer_m(1.3, 1.3, 3.0), std::exp(3.0), 1e-13 * std::exp(3.0));
}

TEST(KummerM, RejectsPoleInB) {
  EXPECT_THROW(kummer_m(0.5, -2.0, 1.0), DomainError);
  EXPECT_THROW(kummer_m(-5.0, -2.0, 1.0), DomainError);
  EXPECT_NO_THROW(kummer_m(-2.0, -3.0, 1.0));
}

TEST(KummerM, RejectsInvalidArgument) {
  EXPECT_THROW(kummer_m(-1.0, 1.0, -0.5), DomainError);
  EXPECT_THROW(kummer_m(-1.0, 1.0, std::nan("")), DomainError);
  EXPECT_THROW(kummer_m(0.5, 1.0, INFINITY), DomainError);
}

TEST(KummerM, ReportsNonConvergence) {
  try {
    kummer_m(0.5, 1.5, 400.0, 1e-15, 50);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.achieved(), e.requested());
  }
}

TEST(Laguerre, SpotValues) {
  EXPECT_EQ(laguerre(0, 0.5, 3.7), 1.0);
  EXPECT_NEAR(laguerre(1, 0.5, 1.0), 0.5, 1e-15);
  EXPECT_NEAR(laguerre(2, 0.0, 0.0), 1.0, 1e-15);
}

TEST(Laguerre, MatchesIndependentLibraryForIntegerOrder) {
  for (unsigned n : {0u, 1u, 4u, 9u, 15u})
    for (unsigned m : {0u, 1u, 3u})
      for (double y : {0.2, 1.7, 6.0}) {
        const double ref = boost::math::laguerre(n, m, y);
        EXPECT_NEAR(laguerre(static_cast<int>(n), m, y), ref, 1e-11 * std::max(1.0, std::abs(ref)));
      }
}

TEST(Laguerre, KummerIdentityProperty) {
  // M(-n, alpha+1; y) = n! / (alpha+1)_n L_n^alpha(y).
  for (int n = 0; n <= 20; ++n)
    for (double alpha : {-0.5, 0.0, 0.5, 1.5, 3.0})
      for (double y : {0.05, 0.7, 2.5, 8.0, 20.0}) {
        const double lhs = kummer_m(-n, alpha + 1.0, y);
        const double rhs = std::exp(std::lgamma(n + 1.0) - std::lgamma(alpha + 1.0 + n) + std::lgamma(alpha + 1.0)) *
                           laguerre(n, alpha, y);
        EXPECT_NEAR(lhs, rhs, 1e-12 * std::max({1.0, std::abs(lhs)})) << n << ' ' << alpha << ' ' << y;
      }
}

TEST(LnGamma, SpotValues) {
  EXPECT_EQ(ln_gamma(1.0), 0.0);
  EXPECT_NEAR(ln_gamma(0.5), std::log(std::sqrt(std::numbers::pi)), 1e-14);
  EXPECT_NEAR(ln_gamma(0.5), 0.5723649, 1e-7);
  EXPECT_NEAR(ln_gamma(6.0), std::log(120.0), 1e-14);
}

TEST(LnGamma, RecurrenceProperty) {
  for (double x = 0.05; x < 60.0; x *= 1.37) EXPECT_NEAR(ln_gamma(x + 1.0) - ln_gamma(x), std::log(x), 1e-12);
}

TEST(LnGamma, RejectsNonPositive) {
  EXPECT_THROW(ln_gamma(0.0), DomainError);
  EXPECT_THROW(ln_gamma(-2.5), DomainError);
}

TEST(Pochhammer, MatchesProduct) {
  EXPECT_EQ(pochhammer(2.5, 0), 1.0);
  EXPECT_NEAR(pochhammer(1.5, 3), 1.5 * 2.5 * 3.5, 1e-14);
}

TEST(Bernoulli, EvenNumbers) {
  EXPECT_EQ(bernoulli_even(1), (Fraction{1, 6}));
  EXPECT_EQ(bernoulli_even(2), (Fraction{-1, 30}));
  EXPECT_EQ(bernoulli_even(3), (Fraction{1, 42}));
  EXPECT_THROW(bernoulli_even(0), DomainError);
  EXPECT_THROW(bernoulli_even(4), DomainError);
}

TEST(Quadrature, ExponentialOnHalfLine) {
  const auto r = integrate([](double x) { return std::exp(-x); }, Interval::half_line(), 1e-10);
  EXPECT_NEAR(r.value, 1.0, 1e-10);
  EXPECT_LE(r.abs_error, 1e-10);
}

TEST(Quadrature, SquareOnUnitInterval) {
  EXPECT_NEAR(integrate([](double x) { return x * x; }, {0.0, 1.0}, 1e-12).value, 1.0 / 3.0, 1e-12);
}

TEST(Quadrature, ConvergenceIntegralMatchesIndependentQuadrature) {
  const double a = 4.0, b = 5.0, tau = 2.0;
  auto f = [&](double x) { return std::exp(-std::sqrt(a * x + b) / tau); };
  boost::math::quadrature::exp_sinh<double> es;
  const double ref = es.integrate(f);
  EXPECT_NEAR(integrate(f, Interval::half_line(), 1e-13).value, ref, 1e-10 * ref);
  EXPECT_NEAR(ref, (2.0 * tau / a) * (tau + std::sqrt(b)) * std::exp(-std::sqrt(b) / tau), 1e-10 * ref);
}

TEST(Quadrature, GammaMoments) {
  double factorial = 1.0;
  for (int k = 0; k <= 10; ++k) {
    if (k > 0) factorial *= k;
    const auto r = integrate([k](double x) { return std::pow(x, k) * std::exp(-x); }, Interval::half_line(),
                             1e-12 * factorial);
    EXPECT_NEAR(r.value / factorial, 1.0, 1e-9) << k;
  }
}

TEST(Quadrature, ReportsExhaustedBudget) {
  auto wild = [](double x) { return std::sin(1.0 / (x + 1e-9)); };
  EXPECT_THROW(integrate(wild, {0.0, 1.0}, 1e-14, 20), ConvergenceError);
}

TEST(Quadrature, RejectsNonFiniteIntegrand) {
  EXPECT_THROW(integrate([](double) { return std::nan(""); }, {0.0, 1.0}, 1e-8), std::exception);
}

TEST(QuadratureRule, InvariantsAndPolynomialExactness) {
  const auto rule = QuadratureRule::gauss_legendre(8, -1.0, 2.0, 3);
  ASSERT_EQ(rule.nodes.size(), rule.weights.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    EXPECT_GT(rule.weights[i], 0.0);
    EXPECT_GT(rule.nodes[i], -1.0);
    EXPECT_LT(rule.nodes[i], 2.0);
  }
  EXPECT_NEAR(rule.apply([](double) { return 1.0; }), 3.0, 1e-13);
  // An 8-point rule is exact up to degree 15.
  EXPECT_NEAR(rule.apply([](double x) { return std::pow(x, 15); }), (std::pow(2.0, 16) - 1.0) / 16.0, 1e-9);
}

TEST(QuadratureRule, HalfLine) {
  const auto rule = QuadratureRule::half_line(20, 8);
  EXPECT_EQ(rule.kind, RuleKind::half_line);
  EXPECT_NEAR(rule.apply([](double x) { return std::exp(-x); }), 1.0, 1e-10);
}
