#include "dunkl/spectrum.hpp"

#include <cmath>
#include <string>

#include "dunkl/special_fn.hpp"

namespace dunkl::spectrum {

double alpha_s(const OscillatorParams& params, Parity parity) {
  return 2.0 * params.ratio() * (0.5 + params.mu()) * (1 - sign(parity)) + 1.0;
}

double energy(int n, const OscillatorParams& params, Parity parity, Branch branch) {
  if (n < 0) throw DomainError("energy: node number must be non-negative");
  const double level = std::sqrt(4.0 * n * params.ratio() + alpha_s(params, parity));
  return static_cast<int>(branch) * params.mass() * level;
}

EigenState eigenstate(int n, const OscillatorParams& params, Parity parity, Branch branch) {
  return {n, parity, energy(n, params, parity, branch), branch};
}

SeriesTable spectrum_table(int n_max, const OscillatorParams& params) {
  if (n_max < 0) throw DomainError("spectrum_table: n_max must be non-negative");
  SeriesTable table;
  table.columns = {{"n", ""}, {"E_even_over_m", ""}, {"E_odd_over_m", ""}};
  for (int n = 0; n <= n_max; ++n) {
    table.rows.push_back({static_cast<double>(n), energy(n, params, Parity::even) / params.mass(),
                          energy(n, params, Parity::odd) / params.mass()});
  }
  return table;
}

double kummer_b(const OscillatorParams& params, Parity parity) {
  return 1.0 - 0.5 * sign(parity) + params.mu();
}

double normalization_constant(int n, const OscillatorParams& params, Parity parity) {
  if (n < 0) throw DomainError("normalization_constant: node number must be non-negative");
  using special::ln_gamma;
  // Integral of the unnormalized density: lambda^{-b} n! Gamma(b)^2 / Gamma(n + b).
  const double b = kummer_b(params, parity);
  const double ln_norm_sq = -b * std::log(params.m_omega()) + ln_gamma(n + 1.0) + 2.0 * ln_gamma(b) -
                            ln_gamma(n + b);
  return std::exp(-0.5 * ln_norm_sq);
}

double normalization_by_quadrature(int n, const OscillatorParams& params, Parity parity) {
  const double two_mu = 2.0 * params.mu();
  auto integrand = [&](double x) {
    const double psi = kg_wavefunction(n, params, parity, x, 1.0);
    return psi * psi * std::pow(x, two_mu);
  };
  const auto domain = special::Interval::half_line();
  const double rough = special::integrate(integrand, domain, 1e-6).value;
  const double fine = special::integrate(integrand, domain, 1e-13 * std::abs(rough), 20000).value;
  return 1.0 / std::sqrt(2.0 * fine);
}

NormalizationTable::NormalizationTable(const OscillatorParams& params, Parity parity, int n_max) {
  if (n_max < 0) throw DomainError("NormalizationTable: n_max must be non-negative");
  values_.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double closed = normalization_constant(n, params, parity);
    const double quad = normalization_by_quadrature(n, params, parity);
    if (std::abs(closed - quad) > 1e-8 * closed)
      throw ConsistencyError("normalization mismatch at n = " + std::to_string(n) + ": closed form " +
                             std::to_string(closed) + " vs quadrature " + std::to_string(quad));
    values_.push_back(closed);
  }
}

double NormalizationTable::operator()(int n) const {
  if (n < 0 || n > n_max()) throw DomainError("NormalizationTable: node number out of range");
  return values_[static_cast<std::size_t>(n)];
}

double kg_wavefunction(int n, const OscillatorParams& params, Parity parity, double x, double norm) {
  const double y = params.m_omega() * x * x;
  const double prefactor = parity == Parity::odd ? x : 1.0;
  return norm * prefactor * std::exp(-0.5 * y) * special::kummer_m(-n, kummer_b(params, parity), y);
}

double kg_wavefunction(int n, const OscillatorParams& params, Parity parity, double x) {
  return kg_wavefunction(n, params, parity, x, normalization_constant(n, params, parity));
}

double probability_density(int n, const OscillatorParams& params, Parity parity, double x) {
  const double psi = kg_wavefunction(n, params, parity, x);
  return psi * psi * std::pow(std::abs(x), 2.0 * params.mu());
}

double reduced_probability_density(int n, const OscillatorParams& params, Parity parity, double xi) {
  const double scale = std::sqrt(params.m_omega());
  return probability_density(n, params, parity, xi / scale) / scale;
}

Spinor dirac_spinor(int n, const OscillatorParams& params, Parity parity, double x) {
  const double lambda = params.m_omega();
  const double y = lambda * x * x;
  const double b = kummer_b(params, parity);
  const double envelope = normalization_constant(n, params, parity) * std::exp(-0.5 * y);
  const double m0 = special::kummer_m(-n, b, y);
  // d/dx M(-n, b; lambda x^2) = 2 lambda x (-n/b) M(1 - n, b + 1; lambda x^2).
  const double m1 = n == 0 ? 0.0 : 2.0 * lambda * (-n / b) * special::kummer_m(1.0 - n, b + 1.0, y);

  double upper_poly = 0.0;
  double dunkl_poly = 0.0;
  if (parity == Parity::even) {
    upper_poly = m0;
    dunkl_poly = x * m1;
  } else {
    // D(x M) = (1 + 2 mu) M + x dM/dx; no division by x.
    upper_poly = x * m0;
    dunkl_poly = (1.0 + 2.0 * params.mu()) * m0 + x * x * m1;
  }
  const double e = energy(n, params, parity);
  return {envelope * upper_poly, -envelope * dunkl_poly / (e + params.mass())};
}

}  // namespace dunkl::spectrum
