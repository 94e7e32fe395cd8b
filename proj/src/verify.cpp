#include "dunkl/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "dunkl/dunkl_core.hpp"
#include "dunkl/oracles.hpp"
#include "dunkl/special_fn.hpp"
#include "dunkl/spectrum.hpp"
#include "dunkl/thermo.hpp"

namespace dunkl::verify {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

Outcome bound(double worst, double tol, const std::string& what = "max error") {
  return {worst <= tol, what + " " + sci(worst) + " (tol " + sci(tol) + ")"};
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<ParityPolynomial> polynomial_sweep() {
  std::vector<ParityPolynomial> out;
  for (std::size_t k = 0; k <= 25; ++k) out.push_back(ParityPolynomial::monomial(k));
  std::mt19937 rng(20240607u);
  std::uniform_int_distribution<int> degree(0, 25);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    out.emplace_back(std::move(c));
  }
  return out;
}

constexpr double kSweepMu[] = {0.0, 0.25, 0.5, 1.25, 3.0};

}  // namespace

std::vector<Check> invariant_checks() {
  using namespace dunkl::special;
  std::vector<Check> checks;

  // special_fn ---------------------------------------------------------------
  checks.push_back({"special_fn", "Kummer M(-n) vs Laguerre recurrence", [] {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.5})
      for (int n = 0; n <= 20; ++n) {
        const double scale = pochhammer(alpha + 1.0, n) / std::exp(ln_gamma(n + 1.0));
        for (int i = 0; i < 100; ++i) {
          const double y = 50.0 * i / 99.0;
          worst = std::max(worst, rel(kummer_m(-n, alpha + 1.0, y) * scale, laguerre(n, alpha, y)));
        }
      }
    return bound(worst, 1e-12, "max relative error");
  }});
  checks.push_back({"special_fn", "ln Gamma recurrence", [] {
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double x = 0.5 + 49.5 * i / 1000.0;
      worst = std::max(worst, std::abs(ln_gamma(x + 1.0) - ln_gamma(x) - std::log(x)));
    }
    return bound(worst, 1e-12, "max absolute error");
  }});
  checks.push_back({"special_fn", "integrate x^k e^-x on half-line", [] {
    double worst = 0.0;
    double factorial = 1.0;
    for (int k = 0; k <= 10; ++k) {
      if (k > 0) factorial *= k;
      const auto res = integrate([k](double x) { return std::pow(x, k) * std::exp(-x); }, Interval::half_line(),
                                 1e-12 * factorial);
      worst = std::max(worst, rel(res.value, factorial));
    }
    return bound(worst, 1e-9, "max relative error");
  }});
  checks.push_back({"special_fn", "quadrature rule invariants", [] {
    const auto rule = QuadratureRule::gauss_legendre(12, 0.0, 1.0, 3);
    bool positive = rule.nodes.size() >= 2;
    for (double w : rule.weights) positive = positive && w > 0.0;
    const double unit = rule.apply([](double) { return 1.0; });
    Outcome o = bound(std::abs(unit - 1.0), 1e-12, "|integral of 1 - 1|");
    o.passed = o.passed && positive;
    return o;
  }});

  // dunkl_core ---------------------------------------------------------------
  checks.push_back({"dunkl_core", "reflection involution and anticommutation", [] {
    int failures = 0;
    for (double mu : kSweepMu) {
      const Rational m(mu);
      for (std::size_t k = 0; k <= 25; ++k) {
        const auto p = ParityPolynomial::monomial(k, Rational(static_cast<long long>(k) + 1));
        if (reflection_apply(reflection_apply(p)) != p) ++failures;
        if (!(reflection_apply(multiply_x(p)) + multiply_x(reflection_apply(p))).is_zero()) ++failures;
        if (!(reflection_apply(dunkl_apply(p, m)) + dunkl_apply(reflection_apply(p), m)).is_zero()) ++failures;
      }
    }
    return Outcome{failures == 0, std::to_string(failures) + " non-zero defects"};
  }});
  checks.push_back({"dunkl_core", "[D, x] = 1 + 2 mu R and [a, a+] = 1 + 2 mu R", [] {
    int failures = 0;
    int total = 0;
    const auto polys = polynomial_sweep();
    for (double mu : kSweepMu) {
      const auto params = OscillatorParams(1.0, 1.5, mu);
      for (const auto& p : polys) {
        failures += !commutator_defect_xD(p, mu).is_zero();
        failures += !ladder_commutator_defect(p, params).is_zero();
        total += 2;
      }
    }
    return Outcome{failures == 0, std::to_string(failures) + " of " + std::to_string(total) + " defects non-zero"};
  }});
  checks.push_back({"dunkl_core", "ladder matrices are mutual transposes", [] {
    double worst = 0.0;
    for (double mu : {0.0, 0.5, 1.5}) {
      const auto params = OscillatorParams(1.0, 1.0, mu);
      const auto a = ladder_matrix(Ladder::annihilation, 24, params).entries;
      const auto ad = ladder_matrix(Ladder::creation, 24, params).entries;
      worst = std::max(worst, (a.transpose() - ad).cwiseAbs().maxCoeff());
    }
    return bound(worst, 1e-12);
  }});
  checks.push_back({"dunkl_core", "mu = 0 reduces to the AJC matrix", [] {
    double worst = 0.0;
    for (double omega : {1.0, 1.5, 2.0}) {
      const auto params = OscillatorParams(1.0, omega, 0.0);
      worst = std::max(worst, (dajc_hamiltonian(40, params) - oracle::standard_ajc_hamiltonian(40, 1.0, omega))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    return bound(worst, 1e-12);
  }});
  checks.push_back({"dunkl_core", "DAJC eigenvalues match +-E_n^s", [] {
    double worst = 0.0;
    for (double mu : {0.0, 0.5})
      for (double r : {1.0, 2.0}) {
        const auto params = OscillatorParams::reduced(r, mu);
        const Eigen::VectorXd ev = dajc_spectrum(48, params);
        for (Parity parity : kBothParities)
          for (int n = 0; n <= 10; ++n)
            for (double sgn : {1.0, -1.0}) {
              const double e = sgn * spectrum::energy(n, params, parity);
              worst = std::max(worst, (ev.array() - e).abs().minCoeff() / std::abs(e));
            }
      }
    return bound(worst, 1e-8, "max relative mismatch");
  }});

  // spectrum -----------------------------------------------------------------
  checks.push_back({"spectrum", "orthonormality under |x|^{2 mu} dx", [] {
    double worst = 0.0;
    for (double mu : {0.0, 0.5, 1.5})
      for (double r : {1.0, 2.0})
        for (Parity parity : kBothParities) {
          const auto g = oracle::gram_matrix(OscillatorParams::reduced(r, mu), parity, 5);
          worst = std::max(worst, (g - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff());
        }
    return bound(worst, 1e-8);
  }});
  checks.push_back({"spectrum", "node count", [] {
    int failures = 0;
    for (Parity parity : kBothParities)
      for (int n = 0; n <= 6; ++n)
        failures += oracle::sign_changes(n, OscillatorParams::reduced(1.0, 0.5), parity, 8.0, 4000) != n;
    return Outcome{failures == 0, std::to_string(failures) + " states with wrong node count"};
  }});
  checks.push_back({"spectrum", "Klein-Gordon eigenvalue residual", [] {
    double worst = 0.0;
    for (double mu : {0.0, 0.5, 1.5})
      for (Parity parity : kBothParities)
        for (int n = 0; n <= 4; ++n)
          for (int i = 1; i <= 20; ++i) {
            const double x = 0.15 * i;
            worst = std::max(worst,
                             oracle::kg_residual(n, OscillatorParams::reduced(1.0, mu), parity, x).relative());
          }
    return bound(worst, 1e-6, "max relative residual");
  }});
  checks.push_back({"spectrum", "definite parity of psi", [] {
    int failures = 0;
    const auto params = OscillatorParams::reduced(1.5, 0.5);
    for (Parity parity : kBothParities)
      for (int n = 0; n <= 5; ++n)
        for (int i = 0; i <= 50; ++i) {
          const double x = 0.1 * i;
          const double plus = spectrum::kg_wavefunction(n, params, parity, x);
          const double minus = spectrum::kg_wavefunction(n, params, parity, -x);
          failures += minus != sign(parity) * plus;
        }
    return Outcome{failures == 0, std::to_string(failures) + " asymmetric samples"};
  }});
  checks.push_back({"spectrum", "mu = 0 even spectrum is m sqrt(4 n r + 1)", [] {
    int failures = 0;
    for (double r : {1.0, 1.5, 2.0})
      for (int n = 0; n <= 100; ++n) {
        const auto params = OscillatorParams::reduced(r, 0.0);
        failures += spectrum::energy(n, params, Parity::even) != params.mass() * std::sqrt(4.0 * n * r + 1.0);
      }
    return Outcome{failures == 0, std::to_string(failures) + " mismatches"};
  }});
  checks.push_back({"spectrum", "Dirac spinor satisfies both first-order equations", [] {
    double worst = 0.0;
    for (double mu : {0.0, 0.5})
      for (Parity parity : kBothParities)
        for (int n = 0; n <= 3; ++n)
          for (int i = 1; i <= 50; ++i) {
            const double x = 0.08 * i;
            const auto res = oracle::dirac_residuals(n, OscillatorParams::reduced(1.0, mu), parity, x);
            worst = std::max({worst, std::abs(res.upper_equation), std::abs(res.lower_equation)});
          }
    return bound(worst, 1e-8, "max residual");
  }});
  checks.push_back({"spectrum", "closed-form normalization vs quadrature", [] {
    for (double mu : {-0.25, 0.0, 0.5, 1.5})
      for (Parity parity : kBothParities) spectrum::NormalizationTable(OscillatorParams(1.0, 2.0, mu), parity, 6);
    return Outcome{true, "n <= 6, mu in {-0.25, 0, 0.5, 1.5}"};
  }});

  // thermo -------------------------------------------------------------------
  checks.push_back({"thermo", "Euler-MacLaurin vs direct sum", [] {
    double worst = 0.0;
    double generic = 0.0;
    for (const auto& c : thermo::figure_configs())
      for (double tau : {3.0, 5.0, 10.0}) {
        const double exact = thermo::partition_exact(c.params, c.parity, tau, 1e-13).value;
        const double em = thermo::partition_em(c.params, c.parity, tau);
        worst = std::max(worst, rel(em, exact));
        generic = std::max(generic, rel(thermo::partition_em_generic(c.params, c.parity, tau, 1), em));
      }
    Outcome o = bound(worst, 0.02, "max relative gap");
    o.passed = o.passed && generic <= 1e-3;
    o.detail += "; generic B2 path " + sci(generic);
    return o;
  }});
  checks.push_back({"thermo", "closed forms vs derivatives of ln Z", [] {
    double worst = 0.0;
    for (const auto& c : thermo::figure_configs())
      for (double tau : thermo::linspace(1.5, 20.0, 38)) {
        auto ln_z = [&](double t) { return std::log(thermo::partition_em(c.params, c.parity, t)); };
        const double h = 1e-4 * tau;
        const double d1 = oracle::derivative(ln_z, tau, h);
        const double d2 = oracle::second_derivative(ln_z, tau, h);
        worst = std::max({worst, rel(thermo::entropy(c.params, c.parity, tau), ln_z(tau) + tau * d1),
                          rel(thermo::mean_energy(c.params, c.parity, tau), tau * tau * d1),
                          rel(thermo::heat_capacity(c.params, c.parity, tau), 2.0 * tau * d1 + tau * tau * d2)});
      }
    return bound(worst, 1e-5, "max relative error");
  }});
  checks.push_back({"thermo", "F = U - tau S and C = dU/dtau", [] {
    double legendre = 0.0;
    double chain = 0.0;
    for (const auto& c : thermo::figure_configs())
      for (double tau : thermo::linspace(1.0, 10.0, 91)) {
        const auto p = thermo::thermo_point(c.params, c.parity, tau);
        legendre = std::max(legendre, rel(p.U - tau * p.S, p.F));
        if (tau >= 1.5) {
          auto u = [&](double t) { return thermo::mean_energy(c.params, c.parity, t); };
          chain = std::max(chain, rel(p.C, oracle::derivative(u, tau, 1e-4 * tau)));
        }
      }
    Outcome o = bound(legendre, 1e-9, "F identity");
    o.passed = o.passed && chain <= 1e-5;
    o.detail += "; C chain " + sci(chain);
    return o;
  }});
  checks.push_back({"thermo", "parity split survives mu = 0", [] {
    const auto params = OscillatorParams::reduced(1.0, 0.0);
    const double even = thermo::partition_em(params, Parity::even, 2.0);
    const double odd = thermo::partition_em(params, Parity::odd, 2.0);
    return Outcome{even != odd, "Z+ = " + sci(even) + ", Z- = " + sci(odd)};
  }});
  checks.push_back({"thermo", "even sector independent of mu", [] {
    int failures = 0;
    for (double r : {1.0, 1.5, 2.0})
      for (double tau : thermo::linspace(1.0, 10.0, 19)) {
        const auto ref = thermo::thermo_point(OscillatorParams::reduced(r, 0.0), Parity::even, tau);
        for (double mu : {0.5, 2.0}) {
          const auto p = thermo::thermo_point(OscillatorParams::reduced(r, mu), Parity::even, tau);
          failures += p.Z != ref.Z || p.F != ref.F || p.S != ref.S || p.U != ref.U || p.C != ref.C;
        }
      }
    return Outcome{failures == 0, std::to_string(failures) + " differing points"};
  }});
  return checks;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks) {
  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r{check.module, check.name, false, "", 0.0};
    try {
      const Outcome o = check.run();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

void print_table(const std::vector<CheckResult>& results, std::ostream& out) {
  for (const auto& r : results) {
    char head[160];
    std::snprintf(head, sizeof head, "%-4s  %-11s %-48s %7.3fs  ", r.passed ? "PASS" : "FAIL", r.module.c_str(),
                  r.name.c_str(), r.seconds);
    out << head << r.detail << '\n';
  }
  int passed = 0;
  for (const auto& r : results) passed += r.passed;
  out << passed << "/" << results.size() << " checks passed\n";
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace dunkl::verify
