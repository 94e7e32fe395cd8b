#pragma once

#include <vector>

#include "dunkl/params.hpp"
#include "dunkl/series_table.hpp"

namespace dunkl::spectrum {

enum class Branch : int { positive = 1, negative = -1 };

/// alpha_s = 2 r (1/2 + mu)(1 - s) + 1; identically 1 in the even sector.
double alpha_s(const OscillatorParams& params, Parity parity);

/// E_n^s = branch * m * sqrt(4 n r + alpha_s).
double energy(int n, const OscillatorParams& params, Parity parity, Branch branch = Branch::positive);

struct EigenState {
  int n;
  Parity parity;
  double energy;
  Branch branch;
};

EigenState eigenstate(int n, const OscillatorParams& params, Parity parity, Branch branch = Branch::positive);

/// Rows (n, E_n^+/m, E_n^-/m) for n = 0..n_max.
SeriesTable spectrum_table(int n_max, const OscillatorParams& params);

/// Second argument of the confluent hypergeometric factor, 1 - s/2 + mu.
double kummer_b(const OscillatorParams& params, Parity parity);

/// N such that the integral of psi^2 |x|^{2 mu} over the real line is 1
/// (closed form through ln Gamma).
double normalization_constant(int n, const OscillatorParams& params, Parity parity);

/// Same normalization from adaptive quadrature of the unnormalized state.
double normalization_by_quadrature(int n, const OscillatorParams& params, Parity parity);

/// Closed-form normalizations for n = 0..n_max of one parity sector,
/// each cross-checked against quadrature at construction. Immutable after
/// construction. Throws ConsistencyError on a mismatch beyond 1e-8.
class NormalizationTable {
 public:
  NormalizationTable(const OscillatorParams& params, Parity parity, int n_max);

  double operator()(int n) const;
  int n_max() const noexcept { return static_cast<int>(values_.size()) - 1; }

 private:
  std::vector<double> values_;
};

/// psi_n^s(x) = N x^{(1-s)/2} e^{-m omega x^2/2} M(-n, 1 - s/2 + mu; m omega x^2).
/// The odd-sector prefactor is the signed x.
double kg_wavefunction(int n, const OscillatorParams& params, Parity parity, double x);

/// Same function with an externally supplied normalization.
double kg_wavefunction(int n, const OscillatorParams& params, Parity parity, double x, double norm);

/// rho(x) = psi^2 |x|^{2 mu}; integrates to one over the real line.
double probability_density(int n, const OscillatorParams& params, Parity parity, double x);

/// Density against the reduced coordinate xi = x sqrt(m omega).
double reduced_probability_density(int n, const OscillatorParams& params, Parity parity, double xi);

struct Spinor {
  double upper;       // real
  double lower_imag;  // the lower component is i * lower_imag
};

/// Positive-branch Dirac spinor: upper = psi_n^s, lower = -i/(E + m) D(upper),
/// with D the Dunkl derivative evaluated without dividing by x.
Spinor dirac_spinor(int n, const OscillatorParams& params, Parity parity, double x);

}  // namespace dunkl::spectrum
