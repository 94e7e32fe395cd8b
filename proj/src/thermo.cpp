#include "dunkl/thermo.hpp"

#include <charconv>
#include <cmath>
#include <thread>

#include "dunkl/special_fn.hpp"
#include "dunkl/spectrum.hpp"

namespace dunkl::thermo {

namespace {

void require_positive_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("reduced temperature tau must be positive");
}

// Pieces of the closed form shared by all observables.
struct ClosedForm {
  double z;    // 1/2 + (tau^2 + tau sqrt(alpha))/(2r) + r/(6 tau sqrt(alpha))
  double dz;   // dZ/dtau
  double d2z;  // d^2Z/dtau^2
};

ClosedForm closed_form(const OscillatorParams& params, Parity parity, double tau) {
  require_positive_tau(tau);
  const double r = params.ratio();
  const double a = std::sqrt(spectrum::alpha_s(params, parity));
  return {0.5 + a * tau / (2.0 * r) + tau * tau / (2.0 * r) + r / (6.0 * a * tau),
          (a + 2.0 * tau) / (2.0 * r) - r / (6.0 * a * tau * tau),
          r / (3.0 * a * tau * tau * tau) + 1.0 / r};
}

}  // namespace

double boltzmann_term(const OscillatorParams& params, Parity parity, double tau, std::int64_t n) {
  const double alpha = spectrum::alpha_s(params, parity);
  const double level = std::sqrt(4.0 * static_cast<double>(n) * params.ratio() + alpha);
  return std::exp(-(level - std::sqrt(alpha)) / tau);
}

double convergence_integral(double a, double b, double tau) {
  require_positive_tau(tau);
  if (!(a > 0.0) || b < 0.0) throw DomainError("convergence_integral: need a > 0 and b >= 0");
  const double root = std::sqrt(b);
  return 2.0 * tau / a * (tau + root) * std::exp(-root / tau);
}

double partition_integral_bound(const OscillatorParams& params, Parity parity, double tau) {
  return convergence_integral(4.0 * params.ratio(), spectrum::alpha_s(params, parity), tau);
}

PartitionSum partition_exact(const OscillatorParams& params, Parity parity, double tau, double tol,
                             std::int64_t max_terms) {
  require_positive_tau(tau);
  if (!(tol > 0.0)) throw DomainError("partition_exact: tolerance must be positive");
  const double a = 4.0 * params.ratio();
  const double alpha = spectrum::alpha_s(params, parity);
  const double root_alpha = std::sqrt(alpha);

  // Neumaier summation of the decreasing terms.
  double sum = 0.0;
  double carry = 0.0;
  double tail = 0.0;
  for (std::int64_t n = 0; n < max_terms; ++n) {
    const double level = std::sqrt(a * static_cast<double>(n) + alpha);
    const double term = std::exp(-(level - root_alpha) / tau);
    const double t = sum + term;
    carry += std::abs(sum) >= term ? (sum - t) + term : (term - t) + sum;
    sum = t;
    // Terms decrease, so the remainder after n is below the integral from n to inf.
    tail = 2.0 * tau / a * (tau + level) * std::exp(-(level - root_alpha) / tau);
    if (tail < tol) return {sum + carry, {n + 1, tail, true}};
  }
  throw ConvergenceError("partition_exact: " + std::to_string(max_terms) + " terms used without convergence", tol,
                         tail);
}

double partition_em(const OscillatorParams& params, Parity parity, double tau) {
  require_positive_tau(tau);
  const double r = params.ratio();
  const double a = std::sqrt(spectrum::alpha_s(params, parity));
  return 0.5 + a * tau / (2.0 * r) + tau * tau / (2.0 * r) + r / (6.0 * a * tau);
}

double euler_maclaurin_sum(const EulerMaclaurinInput& input, int terms) {
  if (terms < 1 || terms > 3) throw DomainError("euler_maclaurin_sum: between one and three corrections");
  constexpr std::array<double, 3> factorial = {2.0, 24.0, 720.0};
  double sum = 0.5 * input.f0 + input.integral;
  for (int p = 1; p <= terms; ++p) {
    const auto i = static_cast<std::size_t>(p - 1);
    sum -= special::bernoulli_even(p).value() / factorial[i] * input.odd_derivatives[i];
  }
  return sum;
}

double euler_maclaurin_sum(const std::function<double(double)>& f, int terms, double h) {
  const double f0 = f(0.0);
  constexpr double far = 1e15;
  if (!(std::abs(far * f(far)) <= 1e-6 * std::max(1.0, std::abs(f0))))
    throw DomainError("euler_maclaurin_sum: summand must decay faster than 1/x");

  const auto domain = special::Interval::half_line();
  const double rough = special::integrate(f, domain, 1e-8 * std::max(1.0, std::abs(f0))).value;
  const double integral = special::integrate(f, domain, 1e-13 * std::max(std::abs(rough), 1e-300), 20000).value;

  auto odd = [&f](double step) {
    const double p1 = f(step) - f(-step);
    const double p2 = f(2 * step) - f(-2 * step);
    const double p3 = f(3 * step) - f(-3 * step);
    return std::array<double, 3>{p1 / (2 * step), (p2 - 2 * p1) / (2 * std::pow(step, 3)),
                                 (p3 - 4 * p2 + 5 * p1) / (2 * std::pow(step, 5))};
  };
  const auto coarse = odd(h);
  const auto fine = odd(0.5 * h);
  EulerMaclaurinInput input{f0, integral, {}};
  for (std::size_t k = 0; k < 3; ++k) {
    input.odd_derivatives[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
    if (!std::isfinite(input.odd_derivatives[k]))
      throw DomainError("euler_maclaurin_sum: derivative evaluation failed");
  }
  return euler_maclaurin_sum(input, terms);
}

std::array<double, 6> boltzmann_derivatives(const OscillatorParams& params, Parity parity, double tau) {
  require_positive_tau(tau);
  const double alpha = spectrum::alpha_s(params, parity);
  const double c = 4.0 * params.ratio() / alpha;
  // Exponent h(x) = -(sqrt(alpha) (1 + c x)^{1/2} - sqrt(alpha)) / tau as a Taylor series.
  std::array<double, 6> h{};
  double binom = 1.0;
  double power = 1.0;
  for (int k = 1; k < 6; ++k) {
    binom *= (0.5 - (k - 1)) / k;
    power *= c;
    h[static_cast<std::size_t>(k)] = -std::sqrt(alpha) * binom * power / tau;
  }
  // exp of a power series: k e_k = sum_j j h_j e_{k-j}.
  std::array<double, 6> e{};
  e[0] = 1.0;
  for (std::size_t k = 1; k < 6; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * h[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  std::array<double, 6> derivs{};
  double factorial = 1.0;
  for (std::size_t k = 0; k < 6; ++k) {
    if (k > 0) factorial *= static_cast<double>(k);
    derivs[k] = factorial * e[k];
  }
  return derivs;
}

double partition_em_generic(const OscillatorParams& params, Parity parity, double tau, int terms) {
  const auto d = boltzmann_derivatives(params, parity, tau);
  const double root_alpha = std::sqrt(spectrum::alpha_s(params, parity));
  // Ground-state-referenced convergence integral.
  const double integral = 2.0 * tau / (4.0 * params.ratio()) * (tau + root_alpha);
  return euler_maclaurin_sum({d[0], integral, {d[1], d[3], d[5]}}, terms);
}

double helmholtz(const OscillatorParams& params, Parity parity, double tau) {
  return -tau * std::log(closed_form(params, parity, tau).z);
}

double entropy(const OscillatorParams& params, Parity parity, double tau) {
  const auto cf = closed_form(params, parity, tau);
  return std::log(cf.z) + tau * cf.dz / cf.z;
}

double mean_energy(const OscillatorParams& params, Parity parity, double tau) {
  const auto cf = closed_form(params, parity, tau);
  return tau * tau * cf.dz / cf.z;
}

double heat_capacity(const OscillatorParams& params, Parity parity, double tau) {
  const auto cf = closed_form(params, parity, tau);
  return 2.0 * tau * cf.dz / cf.z + tau * tau * cf.d2z / cf.z - tau * tau * (cf.dz * cf.dz) / (cf.z * cf.z);
}

ThermoPoint thermo_point(const OscillatorParams& params, Parity parity, double tau) {
  return {tau,
          partition_em(params, parity, tau),
          helmholtz(params, parity, tau),
          entropy(params, parity, tau),
          mean_energy(params, parity, tau),
          heat_capacity(params, parity, tau)};
}

std::string config_label(const ThermoConfig& config) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, config.params.ratio());
  return "r" + std::string(buf, res.ptr);
}

std::vector<ThermoConfig> figure_configs() {
  std::vector<ThermoConfig> out;
  for (Parity parity : kBothParities)
    for (double r : {1.0, 1.5, 2.0}) out.push_back({OscillatorParams::reduced(r, 0.5), parity});
  return out;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw DomainError("linspace: need at least one point");
  if (steps == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
  grid.back() = hi;
  return grid;
}

std::string_view observable_name(Observable obs) noexcept {
  switch (obs) {
    case Observable::Z: return "Z";
    case Observable::F: return "F";
    case Observable::S: return "S";
    case Observable::U: return "U";
    case Observable::C: return "C";
  }
  return "?";
}

double observable_value(const ThermoPoint& point, Observable obs) noexcept {
  switch (obs) {
    case Observable::Z: return point.Z;
    case Observable::F: return point.F;
    case Observable::S: return point.S;
    case Observable::U: return point.U;
    case Observable::C: return point.C;
  }
  return 0.0;
}

namespace {

std::string observable_unit(Observable obs) {
  return obs == Observable::F || obs == Observable::U ? "m" : "";
}

}  // namespace

SeriesTable ThermoScan::table(Observable obs) const {
  SeriesTable t;
  t.columns.push_back({"tau", ""});
  for (const auto& c : configs)
    t.columns.push_back({std::string(observable_name(obs)) + "_" + std::string(to_string(c.parity)) + "_" +
                             config_label(c),
                         observable_unit(obs)});
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    std::vector<double> row{tau_grid[i]};
    for (std::size_t c = 0; c < configs.size(); ++c) row.push_back(observable_value(points[c][i], obs));
    t.rows.push_back(std::move(row));
  }
  return t;
}

SeriesTable ThermoScan::table(Observable obs, Parity parity) const {
  SeriesTable t;
  t.columns.push_back({"tau", ""});
  std::vector<std::size_t> selected;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    if (configs[c].parity != parity) continue;
    selected.push_back(c);
    t.columns.push_back({std::string(observable_name(obs)) + "_" + config_label(configs[c]), observable_unit(obs)});
  }
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    std::vector<double> row{tau_grid[i]};
    for (std::size_t c : selected) row.push_back(observable_value(points[c][i], obs));
    t.rows.push_back(std::move(row));
  }
  return t;
}

ThermoScan thermo_scan(std::vector<ThermoConfig> configs, std::vector<double> tau_grid, unsigned threads) {
  ThermoScan scan{std::move(configs), std::move(tau_grid), {}};
  const std::size_t nc = scan.configs.size();
  const std::size_t nt = scan.tau_grid.size();
  scan.points.assign(nc, std::vector<ThermoPoint>(nt));
  const std::size_t total = nc * nt;
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t c = k / nt;
      const std::size_t i = k % nt;
      scan.points[c][i] = thermo_point(scan.configs[c].params, scan.configs[c].parity, scan.tau_grid[i]);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || total < 2) {
    work(0, total);
    return scan;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (total + threads - 1) / threads;
  for (std::size_t begin = 0; begin < total; begin += chunk)
    pool.emplace_back(work, begin, std::min(total, begin + chunk));
  pool.clear();
  return scan;
}

}  // namespace dunkl::thermo
