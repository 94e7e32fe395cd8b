#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "dunkl/errors.hpp"
#include "dunkl/params.hpp"

namespace dunkl {

/// Exact rational scalar. Every finite double converts to it without loss.
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial sum_k coeffs[k] x^k with trailing zeros trimmed.
///
/// Carries the polynomial factor of an oscillator wavefunction; the Gaussian
/// e^{-m omega x^2 / 2} is implicit wherever it matters.
template <class Scalar>
class BasicPolynomial {
 public:
  BasicPolynomial() = default;
  explicit BasicPolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  BasicPolynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static BasicPolynomial monomial(std::size_t k, Scalar c = Scalar(1)) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = std::move(c);
    return BasicPolynomial(std::move(v));
  }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

  template <class Real = double>
  Real evaluate(Real x) const {
    Real acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<Real>(*it);
    return acc;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  BasicPolynomial& operator*=(const Scalar& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
  }
  friend BasicPolynomial operator+(BasicPolynomial l, const BasicPolynomial& r) { return l += r; }
  friend BasicPolynomial operator-(BasicPolynomial l, const BasicPolynomial& r) { return l -= r; }
  friend BasicPolynomial operator*(BasicPolynomial p, const Scalar& c) { return p *= c; }
  friend BasicPolynomial operator*(const Scalar& c, BasicPolynomial p) { return p *= c; }
  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

  template <class Other>
  BasicPolynomial<Other> convert() const {
    std::vector<Other> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(static_cast<Other>(c));
    return BasicPolynomial<Other>(std::move(v));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using ParityPolynomial = BasicPolynomial<Rational>;
using RealPolynomial = BasicPolynomial<double>;

// ---------------------------------------------------------------------------
// Reflection and the Dunkl derivative. Scalar may be Rational or double.

/// (R p)(x) = p(-x).
template <class Scalar>
BasicPolynomial<Scalar> reflection_apply(const BasicPolynomial<Scalar>& p) {
  std::vector<Scalar> v = p.coeffs();
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return BasicPolynomial<Scalar>(std::move(v));
}

/// x * p.
template <class Scalar>
BasicPolynomial<Scalar> multiply_x(const BasicPolynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  std::vector<Scalar> v;
  v.reserve(p.coeffs().size() + 1);
  v.push_back(Scalar(0));
  v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
  return BasicPolynomial<Scalar>(std::move(v));
}

/// D p = p' + (mu/x)(p - R p). On monomials D x^k = (k + mu(1 - (-1)^k)) x^{k-1}.
template <class Scalar>
BasicPolynomial<Scalar> dunkl_apply(const BasicPolynomial<Scalar>& p, const Scalar& mu) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Scalar> v(c.size() - 1, Scalar(0));
  for (std::size_t k = 1; k < c.size(); ++k) {
    Scalar factor(static_cast<long long>(k));
    if (k % 2 == 1) factor += 2 * mu;
    v[k - 1] = factor * c[k];
  }
  return BasicPolynomial<Scalar>(std::move(v));
}

/// ([D, x] - (1 + 2 mu R)) p. Identically zero.
ParityPolynomial commutator_defect_xD(const ParityPolynomial& p, double mu);

enum class Ladder { creation, annihilation };

/// sqrt(2 m omega) times the ladder operator acting on the polynomial part:
/// annihilation p -> D p, creation p -> 2 m omega x p - D p.
ParityPolynomial ladder_apply_unscaled(Ladder which, const ParityPolynomial& p, const OscillatorParams& params);

/// Ladder operator on the polynomial part (Gaussian factored out).
RealPolynomial ladder_apply(Ladder which, const ParityPolynomial& p, const OscillatorParams& params);

/// ([a, a^dagger] - (1 + 2 mu R)) p, evaluated exactly. Identically zero.
ParityPolynomial ladder_commutator_defect(const ParityPolynomial& p, const OscillatorParams& params);

// ---------------------------------------------------------------------------
// Matrix representations on the truncated parity-graded basis.

/// Basis vector k is the normalized degree-k orthogonal polynomial of the
/// weight |x|^{2 mu} e^{-m omega x^2}; it has parity (-1)^k.
enum class BasisTag { parity_graded_fock };

struct LadderMatrix {
  int dim = 0;
  Eigen::MatrixXd entries;
  BasisTag basis_tag = BasisTag::parity_graded_fock;
};

/// Exact monic orthogonal polynomials p_0..p_{count-1} for the Dunkl weight,
/// together with their squared norms relative to the norm of p_0.
struct DunklBasis {
  std::vector<ParityPolynomial> polys;
  std::vector<Rational> norms;
};

DunklBasis dunkl_orthogonal_basis(int count, const OscillatorParams& params);

/// <p, q> / <1, 1> under |x|^{2 mu} e^{-m omega x^2} dx, exact.
Rational dunkl_inner_product(const ParityPolynomial& p, const ParityPolynomial& q, const OscillatorParams& params);

LadderMatrix ladder_matrix(Ladder which, int dim, const OscillatorParams& params);

/// H = g (sigma^- (x) A + sigma^+ (x) A^dagger) + m sigma_z (x) 1 with
/// g = sqrt(2 m omega) on a spinor (x) oscillator basis of total size dim.
/// Ordering: index = spin * (dim/2) + k with spin 0 the upper component.
Eigen::MatrixXd dajc_hamiltonian(int dim, const OscillatorParams& params);

/// Sorted eigenvalues of dajc_hamiltonian.
Eigen::VectorXd dajc_spectrum(int dim, const OscillatorParams& params);

/// Oscillator level k carried by the upper spinor component for (n, parity).
constexpr int fock_level(int n, Parity parity) noexcept { return 2 * n + (parity == Parity::odd ? 1 : 0); }

}  // namespace dunkl
