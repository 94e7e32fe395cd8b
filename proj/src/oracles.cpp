#include "dunkl/oracles.hpp"

#include <array>
#include <cmath>

#include "dunkl/special_fn.hpp"
#include "dunkl/spectrum.hpp"

namespace dunkl::oracle {

namespace {

constexpr double kStep = 1e-3;

// f'(x) + (mu/x)(f(x) - f(-x)).
template <class F>
double dunkl_numeric(F&& f, double x, double mu) {
  return derivative(f, x, kStep) + mu / x * (f(x) - f(-x));
}

}  // namespace

Residual kg_residual(int n, const OscillatorParams& params, Parity parity, double x) {
  const double norm = spectrum::normalization_constant(n, params, parity);
  auto psi = [&](double t) { return spectrum::kg_wavefunction(n, params, parity, t, norm); };
  const double lambda = params.m_omega();
  const double mu = params.mu();
  const double s = sign(parity);
  const double e = spectrum::energy(n, params, parity);
  const double m = params.mass();

  const double v = psi(x);
  const std::array<double, 6> terms = {second_derivative(psi, x, kStep),
                                       2.0 * mu / x * derivative(psi, x, kStep),
                                       -mu * (1.0 - s) / (x * x) * v,
                                       -lambda * lambda * x * x * v,
                                       lambda * (1.0 + 2.0 * mu * s) * v,
                                       (e * e - m * m) * v};
  Residual r{0.0, 0.0};
  for (double t : terms) {
    r.value += t;
    r.scale += std::abs(t);
  }
  return r;
}

DiracResiduals dirac_residuals(int n, const OscillatorParams& params, Parity parity, double x) {
  auto upper = [&](double t) { return spectrum::dirac_spinor(n, params, parity, t).upper; };
  auto lower = [&](double t) { return spectrum::dirac_spinor(n, params, parity, t).lower_imag; };
  const double lambda = params.m_omega();
  const double e = spectrum::energy(n, params, parity);
  const double m = params.mass();
  const auto here = spectrum::dirac_spinor(n, params, parity, x);
  return {dunkl_numeric(lower, x, params.mu()) - lambda * x * here.lower_imag - (e - m) * here.upper,
          -(dunkl_numeric(upper, x, params.mu()) + lambda * x * here.upper) - (e + m) * here.lower_imag};
}

Eigen::MatrixXd gram_matrix(const OscillatorParams& params, Parity parity, int n_max) {
  const int size = n_max + 1;
  Eigen::MatrixXd g(size, size);
  std::vector<double> norms;
  for (int n = 0; n < size; ++n) norms.push_back(spectrum::normalization_constant(n, params, parity));
  const double two_mu = 2.0 * params.mu();
  for (int i = 0; i < size; ++i) {
    for (int k = i; k < size; ++k) {
      // Same-parity products are even, so integrate the half-line twice.
      auto integrand = [&](double x) {
        return spectrum::kg_wavefunction(i, params, parity, x, norms[static_cast<std::size_t>(i)]) *
               spectrum::kg_wavefunction(k, params, parity, x, norms[static_cast<std::size_t>(k)]) *
               std::pow(x, two_mu);
      };
      const double v = 2.0 * special::integrate(integrand, special::Interval::half_line(), 1e-12, 20000).value;
      g(i, k) = v;
      g(k, i) = v;
    }
  }
  return g;
}

int sign_changes(int n, const OscillatorParams& params, Parity parity, double x_max, int samples) {
  const double norm = spectrum::normalization_constant(n, params, parity);
  int changes = 0;
  double previous = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double x = x_max * i / samples;
    const double v = spectrum::kg_wavefunction(n, params, parity, x, norm);
    if (v == 0.0) continue;
    if (previous != 0.0 && (v > 0.0) != (previous > 0.0)) ++changes;
    previous = v;
  }
  return changes;
}

Eigen::MatrixXd standard_ajc_hamiltonian(int dim, double mass, double omega) {
  const int k = dim / 2;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
  for (int j = 1; j < k; ++j) a(j - 1, j) = std::sqrt(static_cast<double>(j));
  const double g = std::sqrt(2.0 * mass * omega);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  h.topLeftCorner(k, k).diagonal().setConstant(mass);
  h.bottomRightCorner(k, k).diagonal().setConstant(-mass);
  h.topRightCorner(k, k) = g * a.transpose();
  h.bottomLeftCorner(k, k) = g * a;
  return h;
}

}  // namespace dunkl::oracle
