#include "walks/error.hpp"

namespace walks {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::odd_length: return "OddLength";
    case Errc::not_closed: return "NotClosed";
    case Errc::non_integral_area: return "NonIntegralArea";
    case Errc::zero_composition: return "ZeroComposition";
    case Errc::constraint_violated: return "ConstraintViolated";
    case Errc::residual_too_large: return "ResidualTooLarge";
    case Errc::non_hermitian_input: return "NonHermitianInput";
    case Errc::budget_exceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace walks
