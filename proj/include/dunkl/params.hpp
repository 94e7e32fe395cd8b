#pragma once

#include <string_view>

#include "dunkl/errors.hpp"

namespace dunkl {

/// Eigenvalue s of the reflection operator, R psi = s psi.
enum class Parity : int { even = 1, odd = -1 };

constexpr int sign(Parity p) noexcept { return static_cast<int>(p); }

constexpr std::string_view to_string(Parity p) noexcept {
  return p == Parity::even ? "even" : "odd";
}

inline constexpr Parity kBothParities[] = {Parity::even, Parity::odd};

/// Oscillator mass m, frequency omega and Wigner parameter mu (hbar = c = 1).
///
/// mu must exceed -1/2 so that the weight |x|^{2 mu} is integrable at the
/// origin.
class OscillatorParams {
 public:
  OscillatorParams(double mass, double omega, double mu)
      : mass_(mass), omega_(omega), mu_(mu) {
    if (!(mass > 0.0)) throw DomainError("oscillator mass must be positive");
    if (!(omega > 0.0)) throw DomainError("oscillator frequency must be positive");
    if (!(mu > -0.5)) throw DomainError("Wigner parameter mu must exceed -1/2");
  }

  /// Reduced units m = 1, omega = r.
  static OscillatorParams reduced(double r, double mu) { return {1.0, r, mu}; }

  double mass() const noexcept { return mass_; }
  double omega() const noexcept { return omega_; }
  double mu() const noexcept { return mu_; }
  /// r = omega / m.
  double ratio() const noexcept { return omega_ / mass_; }
  /// m * omega, the inverse squared oscillator length.
  double m_omega() const noexcept { return mass_ * omega_; }

  friend bool operator==(const OscillatorParams&, const OscillatorParams&) = default;

 private:
  double mass_;
  double omega_;
  double mu_;
};

}  // namespace dunkl
