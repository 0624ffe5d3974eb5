#pragma once

#include <complex>

namespace walks {

/// Rational flux p/q per lattice cell, i.e. the phase Q = exp(2 pi i p/q).
/// Always coprime with q >= 1, so Q is a primitive q-th root of unity.
class FluxRational {
 public:
  FluxRational(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }

  /// Q^e with the angle reduced mod q first, so large exponents stay exact.
  std::complex<double> phase_power(long long exponent) const;
  std::complex<double> phase() const { return phase_power(1); }
  /// Principal square root exp(i pi p/q).
  std::complex<double> half_phase() const;

  bool operator==(const FluxRational&) const = default;

 private:
  int p_;
  int q_;
};

}  // namespace walks
