#pragma once

// Independent numerical routes used to cross-check the closed forms and the
// exact algebra: finite differences, quadrature and textbook matrices.

#include <cmath>

#include <Eigen/Dense>

#include "dunkl/params.hpp"

namespace dunkl::oracle {

/// Central first difference with one Richardson level, (4 D(h/2) - D(h)) / 3.
template <class F>
double derivative(F&& f, double x, double h) {
  auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2.0 * s); };
  return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

/// Central second difference with one Richardson level.
template <class F>
double second_derivative(F&& f, double x, double h) {
  const double f0 = f(x);
  auto d = [&](double s) { return (f(x + s) - 2.0 * f0 + f(x - s)) / (s * s); };
  return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

struct Residual {
  double value;
  double scale;  // sum of magnitudes of the individual terms

  double relative() const { return scale > 0.0 ? std::abs(value) / scale : std::abs(value); }
};

/// The Klein-Gordon operator of the parity-s sector applied to psi_n^s at
/// x != 0 by finite differences; vanishes for eigenstates.
Residual kg_residual(int n, const OscillatorParams& params, Parity parity, double x);

/// Pointwise residuals of the two first-order Dirac equations at x != 0,
/// with the Dunkl derivative taken by finite differences.
struct DiracResiduals {
  double upper_equation;  // D f - m omega x f - (E - m) Phi
  double lower_equation;  // -(D Phi + m omega x Phi) - (E + m) f
};
DiracResiduals dirac_residuals(int n, const OscillatorParams& params, Parity parity, double x);

/// G_nk = integral of psi_n psi_k |x|^{2 mu} over the real line, n, k <= n_max.
Eigen::MatrixXd gram_matrix(const OscillatorParams& params, Parity parity, int n_max);

/// Number of sign changes of psi_n^s on (0, x_max] from `samples` points.
int sign_changes(int n, const OscillatorParams& params, Parity parity, double x_max, int samples);

/// Anti-Jaynes-Cummings Hamiltonian with the undeformed ladder matrices
/// a_{k-1,k} = sqrt(k), same layout as dajc_hamiltonian.
Eigen::MatrixXd standard_ajc_hamiltonian(int dim, double mass, double omega);

}  // namespace dunkl::oracle
