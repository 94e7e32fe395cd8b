#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace dunkl::special {

/// Confluent hypergeometric function M(a, b; y) = sum_k (a)_k/(b)_k y^k/k!.
///
/// For a = -n the series terminates and is summed as the exact degree-n
/// polynomial in extended precision. Otherwise the series is summed forward
/// until a ratio-based bound on the remaining tail falls below
/// `rel_tol * |partial sum|`; `max_terms` caps the work.
///
/// Throws DomainError for a non-positive integer b (unless the series
/// terminates before the pole), negative or non-finite y.
/// Throws ConvergenceError when the tail bound cannot be met.
double kummer_m(double a, double b, double y, double rel_tol = 1e-15,
                int max_terms = 2000);

/// Generalized Laguerre polynomial L_n^{(alpha)}(y) by forward recurrence.
double laguerre(int n, double alpha, double y);

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// Rising factorial (x)_n.
double pochhammer(double x, int n);

struct Fraction {
  std::int64_t num;
  std::int64_t den;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// B_{2p} for p = 1, 2, 3.
Fraction bernoulli_even(int p);

// ---------------------------------------------------------------------------
// Quadrature

enum class RuleKind { gauss_legendre_composite, half_line };

/// A fixed set of nodes and positive weights.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  RuleKind kind;

  /// Composite `points`-point Gauss-Legendre on [lo, hi] split into `panels`.
  static QuadratureRule gauss_legendre(int points, double lo, double hi, int panels = 1);

  /// [0, inf) via x = t/(1-t) applied to a composite Gauss-Legendre rule on [0, 1).
  static QuadratureRule half_line(int points, int panels = 1);

  template <class F>
  double apply(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Integration domain [lo, hi]; hi may be +infinity.
struct Interval {
  double lo;
  double hi;

  static Interval half_line(double lo = 0.0) { return {lo, std::numeric_limits<double>::infinity()}; }
};

struct IntegrationResult {
  double value;
  double abs_error;
  int intervals;
};

/// Adaptive Gauss-Kronrod (7/15) integration to absolute error `tol`.
///
/// Half-lines are mapped onto [0, 1) with x = lo + t/(1-t). Throws
/// ConvergenceError once `max_intervals` subintervals are exhausted.
IntegrationResult integrate(const std::function<double(double)>& f, Interval domain,
                            double tol, int max_intervals = 4000);

}  // namespace dunkl::special
