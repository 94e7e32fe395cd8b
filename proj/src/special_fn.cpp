#include "dunkl/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dunkl/errors.hpp"
#include "wide_float.hpp"

namespace dunkl::special {

using detail::wide;
using detail::wide_abs;

namespace {

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

double terminating_kummer(int n, double a, double b, double y) {
  std::vector<wide> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  wide term = 1;
  terms.push_back(term);
  for (int k = 0; k < n; ++k) {
    term *= (static_cast<wide>(a) + k) * static_cast<wide>(y);
    term /= (static_cast<wide>(b) + k) * static_cast<wide>(k + 1);
    terms.push_back(term);
  }
  std::sort(terms.begin(), terms.end(),
            [](wide l, wide r) { return wide_abs(l) < wide_abs(r); });
  wide sum = 0;
  for (wide t : terms) sum += t;
  return static_cast<double>(sum);
}

}  // namespace

double kummer_m(double a, double b, double y, double rel_tol, int max_terms) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(y))
    throw DomainError("kummer_m: arguments must be finite");
  if (y < 0.0) throw DomainError("kummer_m: y must be non-negative");

  if (is_nonpositive_integer(a)) {
    const int n = static_cast<int>(-a);
    // M(-n, -m; y) is a well-defined polynomial as long as n <= m.
    if (is_nonpositive_integer(b) && static_cast<int>(-b) < n)
      throw DomainError("kummer_m: b is a non-positive integer reached before termination");
    return terminating_kummer(n, a, b, y);
  }
  if (is_nonpositive_integer(b)) throw DomainError("kummer_m: b must not be a non-positive integer");

  wide sum = 0;
  wide term = 1;
  for (int k = 0; k < max_terms; ++k) {
    sum += term;
    const wide q = (static_cast<wide>(a) + k) * static_cast<wide>(y) /
                   ((static_cast<wide>(b) + k) * static_cast<wide>(k + 1));
    const wide next = term * q;
    if (next == 0) return static_cast<double>(sum);
    const double j = k + 1.0;
    if (j > -a && j > -b) {
      // Ratios beyond this point are bounded by rho.
      const double rho = y / (j + 1.0) * std::max(1.0, std::abs((a + j) / (b + j)));
      if (rho < 1.0) {
        const double tail = std::abs(static_cast<double>(next)) / (1.0 - rho);
        if (tail <= rel_tol * std::abs(static_cast<double>(sum))) return static_cast<double>(sum + next);
      }
    }
    term = next;
  }
  const double achieved = std::abs(static_cast<double>(term)) / std::max(std::abs(static_cast<double>(sum)), 1e-300);
  throw ConvergenceError("kummer_m: series did not converge within " + std::to_string(max_terms) + " terms",
                         rel_tol, achieved);
}

double laguerre(int n, double alpha, double y) {
  if (n < 0) throw DomainError("laguerre: degree must be non-negative");
  if (!(alpha > -1.0)) throw DomainError("laguerre: alpha must exceed -1");
  if (n == 0) return 1.0;
  const wide al = alpha;
  const wide x = y;
  wide prev = 1;
  wide cur = 1 + al - x;
  for (int k = 1; k < n; ++k) {
    const wide next = ((2 * k + 1 + al - x) * cur - (k + al) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive");
  return std::lgamma(x);
}

double pochhammer(double x, int n) {
  if (n < 0) throw DomainError("pochhammer: order must be non-negative");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= x + k;
  return p;
}

Fraction bernoulli_even(int p) {
  switch (p) {
    case 1: return {1, 6};
    case 2: return {-1, 30};
    case 3: return {1, 42};
    default: throw DomainError("bernoulli_even: only B_2, B_4 and B_6 are provided");
  }
}

}  // namespace dunkl::special
