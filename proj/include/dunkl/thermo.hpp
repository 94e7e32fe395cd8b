#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dunkl/params.hpp"
#include "dunkl/series_table.hpp"

namespace dunkl::thermo {

/// Reduced thermodynamics in units k_B = 1, energies in units of m,
/// tau = k_B T / m.
struct ThermoPoint {
  double tau;
  double Z;
  double F;
  double S;
  double U;
  double C;
};

struct SummationReport {
  std::int64_t n_terms_used;
  double tail_bound;
  bool converged;
};

struct PartitionSum {
  double value;
  SummationReport report;
};

/// The closed-form observables are derived from an asymptotic expansion
/// that is only meaningful for tau >= 1.
constexpr bool closed_form_valid(double tau) noexcept { return tau >= 1.0; }

/// Boltzmann weight of level n referenced to the ground state,
/// exp(-(sqrt(4 n r + alpha_s) - sqrt(alpha_s)) / tau).
double boltzmann_term(const OscillatorParams& params, Parity parity, double tau, std::int64_t n);

/// Direct ground-state-referenced sum over the positive-energy levels,
/// truncated once the integral bound on the remaining tail is below `tol`.
/// Throws ConvergenceError (message carries the report) when `max_terms`
/// terms do not suffice.
PartitionSum partition_exact(const OscillatorParams& params, Parity parity, double tau, double tol = 1e-12,
                             std::int64_t max_terms = 200'000'000);

/// Integral of exp(-sqrt(a x + b) / tau) over [0, inf):
/// (2 tau / a)(tau + sqrt(b)) exp(-sqrt(b) / tau).
double convergence_integral(double a, double b, double tau);

/// convergence_integral with a = 4 r, b = alpha_s.
double partition_integral_bound(const OscillatorParams& params, Parity parity, double tau);

/// Four-term Euler-MacLaurin closed form
/// 1/2 + sqrt(alpha) tau/(2r) + tau^2/(2r) + r/(6 sqrt(alpha) tau).
double partition_em(const OscillatorParams& params, Parity parity, double tau);

struct EulerMaclaurinInput {
  double f0;                            // f(0)
  double integral;                      // integral of f over [0, inf)
  std::array<double, 3> odd_derivatives;  // f'(0), f'''(0), f^(5)(0)
};

/// f(0)/2 + integral - sum_{p=1}^{terms} B_{2p}/(2p)! f^{(2p-1)}(0), terms in 1..3.
double euler_maclaurin_sum(const EulerMaclaurinInput& input, int terms = 3);

/// Same formula for a callable decaying on [0, inf): the integral comes from
/// adaptive quadrature and the odd derivatives from Richardson-extrapolated
/// central differences with base step `h`. Throws DomainError for inputs that
/// do not decay faster than 1/x.
double euler_maclaurin_sum(const std::function<double(double)>& f, int terms = 3, double h = 0.05);

/// f^{(k)}(0), k = 0..5, of the Boltzmann summand f(x) = boltzmann_term with
/// n -> x, from its Taylor expansion.
std::array<double, 6> boltzmann_derivatives(const OscillatorParams& params, Parity parity, double tau);

/// The Boltzmann summand pushed through euler_maclaurin_sum with `terms`
/// Bernoulli corrections; terms = 1 is the order kept by partition_em.
double partition_em_generic(const OscillatorParams& params, Parity parity, double tau, int terms);

double helmholtz(const OscillatorParams& params, Parity parity, double tau);
double entropy(const OscillatorParams& params, Parity parity, double tau);
double mean_energy(const OscillatorParams& params, Parity parity, double tau);
double heat_capacity(const OscillatorParams& params, Parity parity, double tau);

ThermoPoint thermo_point(const OscillatorParams& params, Parity parity, double tau);

// ---------------------------------------------------------------------------
// Scans

struct ThermoConfig {
  OscillatorParams params;
  Parity parity;
};

/// Configuration label used for column names, e.g. "r1.5".
std::string config_label(const ThermoConfig& config);

/// r in {1, 1.5, 2} with mu = 1/2, each in both parity sectors (six entries,
/// even sector first).
std::vector<ThermoConfig> figure_configs();

/// `steps` equally spaced points on [lo, hi].
std::vector<double> linspace(double lo, double hi, int steps);

enum class Observable { Z, F, S, U, C };

std::string_view observable_name(Observable obs) noexcept;
double observable_value(const ThermoPoint& point, Observable obs) noexcept;

struct ThermoScan {
  std::vector<ThermoConfig> configs;
  std::vector<double> tau_grid;
  /// points[c][i] is configuration c at tau_grid[i].
  std::vector<std::vector<ThermoPoint>> points;

  /// Columns: tau, then one column per configuration.
  SeriesTable table(Observable obs) const;
  /// Same, restricted to configurations of one parity.
  SeriesTable table(Observable obs, Parity parity) const;
};

/// Evaluates thermo_point for every (configuration, tau). Results do not
/// depend on `threads`.
ThermoScan thermo_scan(std::vector<ThermoConfig> configs, std::vector<double> tau_grid, unsigned threads = 1);

}  // namespace dunkl::thermo
