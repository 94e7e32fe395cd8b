#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <gtest/gtest.h>

#include "dunkl/errors.hpp"
#include "dunkl/oracles.hpp"
#include "dunkl/spectrum.hpp"

using namespace dunkl;
using namespace dunkl::spectrum;

namespace {

// Independent quadrature of psi^2 |x|^{2 mu} over the real line.
double norm_by_exp_sinh(int n, const OscillatorParams& p, Parity s) {
  boost::math::quadrature::exp_sinh<double> es;
  // The density is below 1e-300 long before x = 40 / sqrt(m omega).
  auto f = [&](double x) { return x < 40.0 / std::sqrt(p.m_omega()) ? probability_density(n, p, s, x) : 0.0; };
  return 2.0 * es.integrate(f);
}

}  // namespace

TEST(Alpha, Values) {
  for (double r : {0.3, 1.0, 2.0})
    for (double mu : {-0.25, 0.0, 3.0}) EXPECT_EQ(alpha_s(OscillatorParams::reduced(r, mu), Parity::even), 1.0);
  EXPECT_DOUBLE_EQ(alpha_s(OscillatorParams::reduced(1.0, 0.5), Parity::odd), 5.0);
  EXPECT_DOUBLE_EQ(alpha_s(OscillatorParams::reduced(2.0, 0.5), Parity::odd), 9.0);
}

TEST(Energy, Examples) {
  for (double r : {0.5, 1.0, 2.0}) EXPECT_EQ(energy(0, OscillatorParams::reduced(r, 0.7), Parity::even), 1.0);
  EXPECT_NEAR(energy(0, OscillatorParams::reduced(1.0, 0.5), Parity::odd), 2.23607, 1e-5);
  EXPECT_NEAR(energy(2, OscillatorParams::reduced(1.5, 2.0), Parity::even), std::sqrt(13.0), 1e-15);
  EXPECT_EQ(energy(3, OscillatorParams(2.5, 1.0, 0.0), Parity::even), 2.5 * std::sqrt(4.0 * 3 * 0.4 + 1.0));
}

TEST(Energy, NegativeBranchMirrorsPositive) {
  const auto p = OscillatorParams::reduced(1.5, 0.5);
  for (int n = 0; n < 5; ++n)
    for (Parity s : kBothParities) EXPECT_EQ(energy(n, p, s, Branch::negative), -energy(n, p, s));
  const auto st = eigenstate(2, p, Parity::odd, Branch::negative);
  EXPECT_EQ(st.n, 2);
  EXPECT_EQ(st.energy, -energy(2, p, Parity::odd));
}

TEST(Energy, ZeroMuReductionIsBitExact) {
  for (double r : {1.0, 1.5, 2.0})
    for (int n = 0; n <= 100; ++n)
      EXPECT_EQ(energy(n, OscillatorParams::reduced(r, 0.0), Parity::even), std::sqrt(4.0 * n * r + 1.0));
}

TEST(Energy, MonotoneInNodeNumber) {
  const auto p = OscillatorParams::reduced(1.0, 0.5);
  for (Parity s : kBothParities)
    for (int n = 0; n < 30; ++n) EXPECT_LT(energy(n, p, s), energy(n + 1, p, s));
}

TEST(SpectrumTable, ShapeAndFirstRow) {
  const auto t = spectrum_table(0, OscillatorParams::reduced(1.0, 0.5));
  ASSERT_EQ(t.rows.size(), 1u);
  ASSERT_EQ(t.width(), 3u);
  EXPECT_EQ(t.columns[0].name, "n");
  EXPECT_EQ(t.columns[1].name, "E_even_over_m");
  EXPECT_EQ(t.columns[2].name, "E_odd_over_m");
  EXPECT_EQ(t.rows[0][1], 1.0);
  EXPECT_NEAR(t.rows[0][2], std::sqrt(5.0), 1e-15);
}

TEST(SpectrumTable, ParityGapShrinks) {
  const auto t = spectrum_table(10, OscillatorParams::reduced(1.0, 0.5));
  EXPECT_NEAR(t.rows[0][2] - t.rows[0][1], 1.23607, 1e-5);
  // sqrt(25) vs sqrt(21).
  EXPECT_NEAR(t.rows[5][2] - t.rows[5][1], 5.0 - std::sqrt(21.0), 1e-14);
  for (std::size_t n = 0; n + 1 < t.rows.size(); ++n)
    EXPECT_GT(t.rows[n][2] - t.rows[n][1], t.rows[n + 1][2] - t.rows[n + 1][1]);
}

TEST(Normalization, Examples) {
  EXPECT_NEAR(normalization_constant(0, OscillatorParams(1, 1, 0.0), Parity::even), std::pow(std::numbers::pi, -0.25),
              1e-14);
  EXPECT_NEAR(normalization_constant(0, OscillatorParams(1, 1, 0.5), Parity::even), 1.0, 1e-14);
  // integral of |x|^3 e^{-x^2} over the real line is Gamma(2) = 1.
  EXPECT_NEAR(normalization_constant(0, OscillatorParams(1, 1, 0.5), Parity::odd), 1.0, 1e-14);
}

TEST(Normalization, MatchesIndependentQuadrature) {
  for (double mu : {0.0, 0.5, 1.5})
    for (Parity s : kBothParities)
      for (int n = 0; n <= 6; ++n) {
        const auto p = OscillatorParams(1.0, 1.3, mu);
        EXPECT_NEAR(norm_by_exp_sinh(n, p, s), 1.0, 1e-10) << mu << ' ' << n;
        EXPECT_NEAR(normalization_by_quadrature(n, p, s) / normalization_constant(n, p, s), 1.0, 1e-9);
      }
}

TEST(NormalizationTable, CrossChecked) {
  const auto p = OscillatorParams::reduced(1.0, 0.5);
  const NormalizationTable table(p, Parity::odd, 5);
  EXPECT_EQ(table.n_max(), 5);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(table(n), normalization_constant(n, p, Parity::odd));
  EXPECT_THROW(table(6), DomainError);
}

TEST(Wavefunction, GroundStateIsGaussian) {
  const auto p = OscillatorParams(1.0, 2.0, 0.3);
  const double n0 = normalization_constant(0, p, Parity::even);
  for (double x : {-2.0, 0.0, 0.7}) EXPECT_NEAR(kg_wavefunction(0, p, Parity::even, x), n0 * std::exp(-x * x), 1e-15);
}

TEST(Wavefunction, OddVanishesAtOrigin) {
  const auto p = OscillatorParams::reduced(1.0, 0.5);
  EXPECT_EQ(kg_wavefunction(0, p, Parity::odd, 0.0), 0.0);
  EXPECT_EQ(probability_density(0, p, Parity::odd, 0.0), 0.0);
}

TEST(Wavefunction, FirstExcitedNode) {
  // b = 1 - 1/2 + 1/2 = 1, so M(-1, 1; x^2) = 1 - x^2 vanishes at x = 1.
  const auto p = OscillatorParams(1.0, 1.0, 0.5);
  EXPECT_EQ(kummer_b(p, Parity::even), 1.0);
  EXPECT_NEAR(kg_wavefunction(1, p, Parity::even, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(probability_density(1, p, Parity::even, 1.0), 0.0, 1e-15);
  EXPECT_LT(kg_wavefunction(1, p, Parity::even, 0.9) * kg_wavefunction(1, p, Parity::even, 1.1), 0.0);
}

TEST(Wavefunction, NodeCountAndParity) {
  for (double mu : {0.0, 0.5, 2.0})
    for (Parity s : kBothParities)
      for (int n = 0; n <= 8; ++n) {
        const auto p = OscillatorParams::reduced(1.5, mu);
        EXPECT_EQ(oracle::sign_changes(n, p, s, 12.0, 6000), n);
        for (double x : {0.3, 1.1, 2.7})
          EXPECT_EQ(kg_wavefunction(n, p, s, -x), sign(s) * kg_wavefunction(n, p, s, x));
      }
}

TEST(Wavefunction, GramMatrixIsIdentity) {
  for (double mu : {0.0, 0.5, 1.5})
    for (Parity s : kBothParities) {
      const auto g = oracle::gram_matrix(OscillatorParams::reduced(1.0, mu), s, 5);
      EXPECT_LE((g - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-8);
    }
}

TEST(Wavefunction, KleinGordonResidual) {
  for (double mu : {0.0, 0.5, 1.5})
    for (Parity s : kBothParities)
      for (int n = 0; n <= 4; ++n)
        for (double x : {0.35, 0.9, 1.7}) {
          const auto res = oracle::kg_residual(n, OscillatorParams::reduced(1.0, mu), s, x);
          EXPECT_LE(res.relative(), 1e-6) << mu << ' ' << n << ' ' << x;
        }
}

TEST(Density, ReducedCoordinateIntegratesToOne) {
  const auto p = OscillatorParams(1.0, 2.0, 0.5);
  boost::math::quadrature::exp_sinh<double> es;
  for (Parity s : kBothParities)
    for (int n = 0; n <= 2; ++n) {
      auto f = [&](double xi) { return xi < 40.0 ? reduced_probability_density(n, p, s, xi) : 0.0; };
      EXPECT_NEAR(2.0 * es.integrate(f), 1.0, 1e-10);
    }
}

TEST(Dirac, GroundStateLowerComponentVanishes) {
  // (D + m omega x) annihilates the Gaussian ground state, and E_0^+ = m.
  for (double mu : {0.0, 0.5}) {
    const auto p = OscillatorParams(1.0, 1.3, mu);
    for (double x : {-1.0, 0.4, 1.6}) {
      const auto sp = dirac_spinor(0, p, Parity::even, x);
      EXPECT_NEAR(sp.upper, kg_wavefunction(0, p, Parity::even, x), 1e-15);
      EXPECT_NEAR(sp.lower_imag, 0.0, 1e-15);
    }
  }
}

TEST(Dirac, LowerComponentMatchesFiniteDifferenceOperator) {
  // lower = -(D psi + m omega x psi) / (E + m), D applied by finite differences.
  const auto p = OscillatorParams(1.0, 1.3, 0.5);
  for (Parity s : kBothParities)
    for (int n : {1, 2}) {
      auto psi = [&](double t) { return kg_wavefunction(n, p, s, t); };
      const double e = energy(n, p, s);
      for (double x : {-1.1, 0.3, 0.8, 1.7}) {
        const double d = oracle::derivative(psi, x, 1e-3) + 0.5 * (psi(x) - psi(-x)) / x;
        EXPECT_NEAR(dirac_spinor(n, p, s, x).lower_imag, -(d + 1.3 * x * psi(x)) / (e + 1.0), 1e-9);
      }
    }
}

TEST(Dirac, FirstOrderResidualsOnGrid) {
  const auto p = OscillatorParams::reduced(1.0, 0.5);
  for (int i = 1; i <= 50; ++i) {
    const double x = 0.06 * i;
    const auto res = oracle::dirac_residuals(2, p, Parity::odd, x);
    EXPECT_LE(std::abs(res.upper_equation), 1e-8) << x;
    EXPECT_LE(std::abs(res.lower_equation), 1e-8) << x;
  }
}

TEST(Dirac, ResidualsAcrossParameters) {
  for (double mu : {0.0, 0.5, 1.5})
    for (Parity s : kBothParities)
      for (int n = 0; n <= 3; ++n)
        for (double x : {-1.2, 0.5, 1.9}) {
          const auto res = oracle::dirac_residuals(n, OscillatorParams::reduced(1.5, mu), s, x);
          EXPECT_LE(std::abs(res.upper_equation), 1e-8);
          EXPECT_LE(std::abs(res.lower_equation), 1e-8);
        }
}
