#include "dunkl/dunkl_core.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace dunkl {

namespace {

Rational exact(double v) { return Rational(v); }

Rational two_m_omega(const OscillatorParams& params) {
  return 2 * exact(params.mass()) * exact(params.omega());
}

// Moments <x^k> / <1> of |x|^{2 mu} e^{-lambda x^2}: zero for odd k,
// (mu + 1/2)_j / lambda^j for k = 2j.
std::vector<Rational> dunkl_moments(std::size_t max_degree, const OscillatorParams& params) {
  const Rational lambda = exact(params.mass()) * exact(params.omega());
  const Rational shift = exact(params.mu()) + Rational(1, 2);
  std::vector<Rational> m(max_degree + 1, Rational(0));
  Rational even(1);
  for (std::size_t k = 0; k <= max_degree; k += 2) {
    m[k] = even;
    even *= (shift + static_cast<long long>(k / 2)) / lambda;
  }
  return m;
}

Rational inner_with_moments(const ParityPolynomial& p, const ParityPolynomial& q, const std::vector<Rational>& m) {
  Rational sum(0);
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = (i % 2); j < b.size(); j += 2) sum += a[i] * b[j] * m[i + j];
  }
  return sum;
}

}  // namespace

ParityPolynomial commutator_defect_xD(const ParityPolynomial& p, double mu) {
  const Rational m = exact(mu);
  ParityPolynomial commutator = dunkl_apply(multiply_x(p), m) - multiply_x(dunkl_apply(p, m));
  return commutator - p - reflection_apply(p) * (2 * m);
}

ParityPolynomial ladder_apply_unscaled(Ladder which, const ParityPolynomial& p, const OscillatorParams& params) {
  const Rational mu = exact(params.mu());
  ParityPolynomial dp = dunkl_apply(p, mu);
  if (which == Ladder::annihilation) return dp;
  return multiply_x(p) * two_m_omega(params) - dp;
}

RealPolynomial ladder_apply(Ladder which, const ParityPolynomial& p, const OscillatorParams& params) {
  const double scale = 1.0 / std::sqrt(2.0 * params.m_omega());
  return ladder_apply_unscaled(which, p, params).convert<double>() * scale;
}

ParityPolynomial ladder_commutator_defect(const ParityPolynomial& p, const OscillatorParams& params) {
  const auto up = [&](const ParityPolynomial& q) { return ladder_apply_unscaled(Ladder::creation, q, params); };
  const auto down = [&](const ParityPolynomial& q) { return ladder_apply_unscaled(Ladder::annihilation, q, params); };
  // a = A'/sqrt(2 m omega), a^dagger = C'/sqrt(2 m omega).
  ParityPolynomial commutator = down(up(p)) - up(down(p));
  commutator *= Rational(1) / two_m_omega(params);
  return commutator - p - reflection_apply(p) * (2 * exact(params.mu()));
}

Rational dunkl_inner_product(const ParityPolynomial& p, const ParityPolynomial& q, const OscillatorParams& params) {
  const std::size_t deg = static_cast<std::size_t>(std::max(p.degree(), 0) + std::max(q.degree(), 0));
  return inner_with_moments(p, q, dunkl_moments(deg, params));
}

DunklBasis dunkl_orthogonal_basis(int count, const OscillatorParams& params) {
  if (count < 1) throw DomainError("dunkl_orthogonal_basis: need at least one polynomial");
  const auto moments = dunkl_moments(2 * static_cast<std::size_t>(count), params);
  DunklBasis basis;
  basis.polys.reserve(static_cast<std::size_t>(count));
  basis.polys.push_back(ParityPolynomial{Rational(1)});
  basis.norms.push_back(Rational(1));
  if (count > 1) {
    basis.polys.push_back(ParityPolynomial::monomial(1));
    basis.norms.push_back(inner_with_moments(basis.polys[1], basis.polys[1], moments));
  }
  // Stieltjes recurrence; the weight is even so the diagonal coefficient vanishes.
  for (int k = 1; k + 1 < count; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const Rational beta = basis.norms[ku] / basis.norms[ku - 1];
    ParityPolynomial next = multiply_x(basis.polys[ku]) - basis.polys[ku - 1] * beta;
    basis.norms.push_back(inner_with_moments(next, next, moments));
    basis.polys.push_back(std::move(next));
  }
  return basis;
}

LadderMatrix ladder_matrix(Ladder which, int dim, const OscillatorParams& params) {
  if (dim < 1) throw DomainError("ladder_matrix: dimension must be positive");
  // One extra polynomial: the creation image of the top state reaches degree dim.
  const DunklBasis basis = dunkl_orthogonal_basis(dim + 1, params);
  const double inv_g = 1.0 / std::sqrt(2.0 * params.m_omega());

  LadderMatrix out;
  out.dim = dim;
  out.entries = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    // Expand the image in the monic basis by back-substitution on the degree.
    ParityPolynomial image = ladder_apply_unscaled(which, basis.polys[static_cast<std::size_t>(j)], params);
    // Components beyond the truncation are projected out.
    for (int i = image.degree(); i >= 0; --i) {
      const Rational c = image.coeff(static_cast<std::size_t>(i));
      if (c == 0) continue;
      if (i < dim) {
        const Rational ratio = basis.norms[static_cast<std::size_t>(i)] / basis.norms[static_cast<std::size_t>(j)];
        out.entries(i, j) = static_cast<double>(c) * std::sqrt(static_cast<double>(ratio)) * inv_g;
      }
      image -= basis.polys[static_cast<std::size_t>(i)] * c;
    }
  }
  return out;
}

Eigen::MatrixXd dajc_hamiltonian(int dim, const OscillatorParams& params) {
  if (dim < 2 || dim % 2 != 0) throw DomainError("dajc_hamiltonian: dimension must be even and at least 2");
  const int k = dim / 2;
  const double g = std::sqrt(2.0 * params.m_omega());
  const double m = params.mass();
  const Eigen::MatrixXd a = ladder_matrix(Ladder::annihilation, k, params).entries;
  const Eigen::MatrixXd ad = ladder_matrix(Ladder::creation, k, params).entries;

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  h.topLeftCorner(k, k).diagonal().setConstant(m);
  h.bottomRightCorner(k, k).diagonal().setConstant(-m);
  h.topRightCorner(k, k) = g * ad;
  h.bottomLeftCorner(k, k) = g * a;
  return h;
}

Eigen::VectorXd dajc_spectrum(int dim, const OscillatorParams& params) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dajc_hamiltonian(dim, params), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace dunkl
