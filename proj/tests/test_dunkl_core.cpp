#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "dunkl/dunkl_core.hpp"
#include "dunkl/oracles.hpp"
#include "dunkl/spectrum.hpp"

using namespace dunkl;

namespace {

ParityPolynomial poly(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return ParityPolynomial(std::move(v));
}

ParityPolynomial random_polynomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> degree(0, 25), numer(-1000, 1000), denom(1, 97);
  std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& v : c) v = Rational(numer(rng), denom(rng));
  return ParityPolynomial(std::move(c));
}

const double kMus[] = {0.0, 0.25, 0.5, 1.25, 3.0};

}  // namespace

TEST(Reflection, Examples) {
  EXPECT_EQ(reflection_apply(poly({3, 0, 1})), poly({3, 0, 1}));
  EXPECT_EQ(reflection_apply(poly({0, 0, 0, 1})), poly({0, 0, 0, -1}));
  EXPECT_EQ(reflection_apply(poly({1, 1})), poly({1, -1}));
}

TEST(Reflection, InvolutionProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_polynomial(rng);
    EXPECT_EQ(reflection_apply(reflection_apply(p)), p);
  }
}

TEST(DunklOperator, Examples) {
  EXPECT_EQ(dunkl_apply(poly({0, 0, 1}), Rational(0.7)), poly({0, 2}));
  EXPECT_EQ(dunkl_apply(poly({0, 1}), Rational(0.7)), ParityPolynomial{1 + 2 * Rational(0.7)});
  EXPECT_NEAR(dunkl_apply(poly({0, 1}).convert<double>(), 0.7).evaluate(1.0), 2.4, 1e-15);
  EXPECT_EQ(dunkl_apply(poly({0, 0, 0, 1}), Rational(0.5)), poly({0, 0, 4}));
  EXPECT_TRUE(dunkl_apply(poly({5}), Rational(1)).is_zero());
}

TEST(DunklOperator, AnticommutesWithReflection) {
  std::mt19937_64 rng(11);
  for (double mu : kMus)
    for (int i = 0; i < 20; ++i) {
      const auto p = random_polynomial(rng);
      const Rational m(mu);
      EXPECT_TRUE((dunkl_apply(reflection_apply(p), m) + reflection_apply(dunkl_apply(p, m))).is_zero());
    }
}

TEST(DunklOperator, MatchesPointwiseDefinition) {
  // D f(x) = f'(x) + mu (f(x) - f(-x)) / x.
  const auto p = poly({2, -1, 3, 5, 0, -2});
  const auto pd = p.convert<double>();
  for (double mu : kMus)
    for (double x : {-1.3, 0.4, 2.1}) {
      const auto d = dunkl_apply(pd, mu);
      const double fd = oracle::derivative([&](double t) { return pd.evaluate(t); }, x, 1e-3) +
                        mu * (pd.evaluate(x) - pd.evaluate(-x)) / x;
      EXPECT_NEAR(d.evaluate(x), fd, 1e-8 * std::max(1.0, std::abs(fd)));
    }
}

TEST(CommutatorDefect, Examples) {
  EXPECT_TRUE(commutator_defect_xD(poly({1}), 0.5).is_zero());
  EXPECT_TRUE(commutator_defect_xD(poly({0, 1}), 0.5).is_zero());
  EXPECT_TRUE(commutator_defect_xD(poly({2, 0, 1, 0, 0, 1}), 1.25).is_zero());
}

TEST(CommutatorDefect, VanishesOnMonomialsAndRandomPolynomials) {
  std::mt19937_64 rng(20240607);
  std::vector<ParityPolynomial> ps;
  for (std::size_t k = 0; k <= 25; ++k) ps.push_back(ParityPolynomial::monomial(k));
  for (int i = 0; i < 100; ++i) ps.push_back(random_polynomial(rng));
  for (double mu : kMus) {
    const auto params = OscillatorParams(1.0, 1.5, mu);
    for (const auto& p : ps) {
      EXPECT_TRUE(commutator_defect_xD(p, mu).is_zero());
      EXPECT_TRUE(ladder_commutator_defect(p, params).is_zero());
    }
  }
}

TEST(Ladder, Examples) {
  const auto params = OscillatorParams(1.0, 1.0, 0.5);
  EXPECT_TRUE(ladder_apply(Ladder::annihilation, poly({1}), params).is_zero());
  const auto up = ladder_apply(Ladder::creation, poly({1}), params);
  ASSERT_EQ(up.degree(), 1);
  EXPECT_NEAR(up.coeff(1), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(up.coeff(0), 0.0, 0.0);
  // [a, a+] x = (1 + 2 mu R) x = 0 for mu = 1/2.
  const auto x = poly({0, 1});
  auto down = [&](const ParityPolynomial& p) { return ladder_apply_unscaled(Ladder::annihilation, p, params); };
  auto upf = [&](const ParityPolynomial& p) { return ladder_apply_unscaled(Ladder::creation, p, params); };
  EXPECT_TRUE((down(upf(x)) - upf(down(x))).is_zero());
}

TEST(Ladder, MutualTransposes) {
  for (double mu : {0.0, 0.5, 1.5, 3.0}) {
    const auto params = OscillatorParams(1.3, 0.8, mu);
    const auto a = ladder_matrix(Ladder::annihilation, 20, params);
    const auto ad = ladder_matrix(Ladder::creation, 20, params);
    EXPECT_EQ(a.basis_tag, BasisTag::parity_graded_fock);
    EXPECT_LE((a.entries.transpose() - ad.entries).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Ladder, DeformedMatrixElements) {
  // a|k> = sqrt([k]) |k-1> with [k] = k + mu (1 - (-1)^k).
  const double mu = 0.75;
  const auto a = ladder_matrix(Ladder::annihilation, 12, OscillatorParams(1.0, 2.0, mu)).entries;
  for (int k = 1; k < 12; ++k) EXPECT_NEAR(a(k - 1, k), std::sqrt(k + (k % 2 ? 2 * mu : 0.0)), 1e-13);
}

TEST(OrthogonalBasis, ExactOrthogonality) {
  const auto params = OscillatorParams(1.0, 1.5, 1.25);
  const auto basis = dunkl_orthogonal_basis(10, params);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const Rational ip = dunkl_inner_product(basis.polys[i], basis.polys[j], params);
      if (i == j) EXPECT_EQ(ip, basis.norms[i]);
      else EXPECT_EQ(ip, 0);
    }
  EXPECT_THROW(dunkl_orthogonal_basis(0, params), DomainError);
}

TEST(Dajc, GroundStatePair) {
  const auto ev = dajc_spectrum(40, OscillatorParams(1.0, 1.0, 0.0));
  auto has = [&](double e) { return (ev.array() - e).abs().minCoeff() < 1e-10; };
  EXPECT_TRUE(has(1.0));
  EXPECT_TRUE(has(-1.0));
}

TEST(Dajc, OddGroundStateAtHalfMu) {
  const auto ev = dajc_spectrum(40, OscillatorParams(1.0, 1.0, 0.5));
  EXPECT_LT((ev.array() - std::sqrt(5.0)).abs().minCoeff(), 1e-10);
  EXPECT_LT((ev.array() + std::sqrt(5.0)).abs().minCoeff(), 1e-10);
}

TEST(Dajc, ReducesToStandardAjcAtZeroMu) {
  for (double omega : {0.5, 1.0, 2.0}) {
    const auto h = dajc_hamiltonian(30, OscillatorParams(1.7, omega, 0.0));
    EXPECT_LE((h - oracle::standard_ajc_hamiltonian(30, 1.7, omega)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Dajc, SymmetricAndInteriorSpectrumMatchesClosedForm) {
  for (double mu : {0.0, 0.5, 1.5})
    for (double r : {1.0, 1.5, 2.0}) {
      const auto params = OscillatorParams::reduced(r, mu);
      const auto h = dajc_hamiltonian(48, params);
      EXPECT_LE((h - h.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
      const Eigen::VectorXd ev = solver.eigenvalues();
      for (Parity s : kBothParities)
        for (int n = 0; n <= 10; ++n) {
          const double e = spectrum::energy(n, params, s);
          EXPECT_LT((ev.array() - e).abs().minCoeff(), 1e-8 * e);
          EXPECT_LT((ev.array() + e).abs().minCoeff(), 1e-8 * e);
        }
    }
}

TEST(Dajc, RejectsBadDimension) {
  const auto params = OscillatorParams(1.0, 1.0, 0.5);
  EXPECT_THROW(dajc_hamiltonian(0, params), DomainError);
  EXPECT_THROW(dajc_hamiltonian(7, params), DomainError);
  EXPECT_THROW(ladder_matrix(Ladder::creation, 0, params), DomainError);
}

TEST(FockLevel, ParityGrading) {
  static_assert(fock_level(0, Parity::even) == 0);
  static_assert(fock_level(0, Parity::odd) == 1);
  static_assert(fock_level(3, Parity::odd) == 7);
}

TEST(Params, Validation) {
  EXPECT_THROW(OscillatorParams(0.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(OscillatorParams(1.0, -1.0, 0.0), DomainError);
  EXPECT_THROW(OscillatorParams(1.0, 1.0, -0.5), DomainError);
  EXPECT_NO_THROW(OscillatorParams(1.0, 1.0, -0.49));
  EXPECT_EQ(OscillatorParams::reduced(1.5, 0.5).ratio(), 1.5);
}
