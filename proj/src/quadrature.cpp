#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/special_fn.hpp"

namespace dunkl::special {

namespace {

// Nodes and weights of the Gauss-Legendre rule on [-1, 1] (Newton on P_n).
void legendre_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    w[static_cast<std::size_t>(i)] = weight;
    w[static_cast<std::size_t>(n - 1 - i)] = weight;
  }
}

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class G>
Segment kronrod15(const G& g, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::array<double, 15> fv{};
  for (int j = 0; j < 7; ++j) {
    fv[static_cast<std::size_t>(j)] = g(center - half * kXgk[static_cast<std::size_t>(j)]);
    fv[static_cast<std::size_t>(14 - j)] = g(center + half * kXgk[static_cast<std::size_t>(j)]);
  }
  fv[7] = g(center);

  double kronrod = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  double abs_sum = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double pair = fv[static_cast<std::size_t>(j)] + fv[static_cast<std::size_t>(14 - j)];
    kronrod += kWgk[static_cast<std::size_t>(j)] * pair;
    abs_sum += kWgk[static_cast<std::size_t>(j)] *
               (std::abs(fv[static_cast<std::size_t>(j)]) + std::abs(fv[static_cast<std::size_t>(14 - j)]));
    if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    asc += kWgk[static_cast<std::size_t>(j)] *
           (std::abs(fv[static_cast<std::size_t>(j)] - mean) + std::abs(fv[static_cast<std::size_t>(14 - j)] - mean));

  const double result = kronrod * half;
  abs_sum *= std::abs(half);
  asc *= std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * abs_sum, err);
  return {lo, hi, result, err};
}

template <class G>
IntegrationResult adaptive(const G& g, double lo, double hi, double tol, int max_intervals) {
  std::priority_queue<Segment> queue;
  queue.push(kronrod15(g, lo, hi));
  double total = queue.top().value;
  double error = queue.top().error;
  int intervals = 1;
  while (error > tol) {
    if (intervals >= max_intervals)
      throw ConvergenceError("integrate: interval budget of " + std::to_string(max_intervals) + " exhausted",
                             tol, error);
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi))
      throw ConvergenceError("integrate: subinterval width reached machine resolution", tol, error);
    const Segment left = kronrod15(g, worst.lo, mid);
    const Segment right = kronrod15(g, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++intervals;
    // Recompute the sums periodically to shed accumulated rounding drift.
    if (intervals % 64 == 0) {
      auto copy = queue;
      total = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  return {total, error, intervals};
}

}  // namespace

QuadratureRule QuadratureRule::gauss_legendre(int points, double lo, double hi, int panels) {
  if (points < 2) throw DomainError("gauss_legendre: need at least two nodes per panel");
  if (panels < 1) throw DomainError("gauss_legendre: need at least one panel");
  if (!(hi > lo)) throw DomainError("gauss_legendre: interval must have positive length");
  std::vector<double> x, w;
  legendre_nodes(points, x, w);
  QuadratureRule rule{{}, {}, RuleKind::gauss_legendre_composite};
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    for (std::size_t i = 0; i < x.size(); ++i) {
      rule.nodes.push_back(a + 0.5 * width * (x[i] + 1.0));
      rule.weights.push_back(0.5 * width * w[i]);
    }
  }
  return rule;
}

QuadratureRule QuadratureRule::half_line(int points, int panels) {
  QuadratureRule base = gauss_legendre(points, 0.0, 1.0, panels);
  QuadratureRule rule{{}, {}, RuleKind::half_line};
  for (std::size_t i = 0; i < base.nodes.size(); ++i) {
    const double t = base.nodes[i];
    const double s = 1.0 - t;
    rule.nodes.push_back(t / s);
    rule.weights.push_back(base.weights[i] / (s * s));
  }
  return rule;
}

IntegrationResult integrate(const std::function<double(double)>& f, Interval domain, double tol,
                            int max_intervals) {
  if (!(tol > 0.0)) throw DomainError("integrate: tolerance must be positive");
  if (!std::isfinite(domain.lo)) throw DomainError("integrate: lower limit must be finite");
  if (!(domain.hi > domain.lo)) throw DomainError("integrate: empty domain");

  auto checked = [&f](double x) {
    const double v = f(x);
    if (!std::isfinite(v)) throw DomainError("integrate: integrand is not finite at x = " + std::to_string(x));
    return v;
  };
  if (std::isinf(domain.hi)) {
    const double lo = domain.lo;
    auto mapped = [&checked, lo](double t) {
      const double s = 1.0 - t;
      return checked(lo + t / s) / (s * s);
    };
    return adaptive(mapped, 0.0, 1.0, tol, max_intervals);
  }
  return adaptive(checked, domain.lo, domain.hi, tol, max_intervals);
}

}  // namespace dunkl::special
