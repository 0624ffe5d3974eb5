#include "walks/flux.hpp"

#include <numbers>
#include <numeric>
#include <string>

#include "walks/error.hpp"

namespace walks {

FluxRational::FluxRational(int p, int q) : p_(p), q_(q) {
  if (q < 1) {
    throw Error(Errc::invalid_argument, "flux denominator must be >= 1, got " + std::to_string(q));
  }
  if (std::gcd(p, q) != 1) {
    throw Error(Errc::invalid_argument,
                "flux " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
  }
}

std::complex<double> FluxRational::phase_power(long long exponent) const {
  long long r = (static_cast<long long>(p_) * exponent) % q_;
  if (r < 0) r += q_;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / q_);
}

std::complex<double> FluxRational::half_phase() const {
  return std::polar(1.0, std::numbers::pi * static_cast<double>(p_) / q_);
}

}  // namespace walks
