#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace walks {

enum class Errc {
  invalid_argument,
  odd_length,
  not_closed,
  non_integral_area,
  zero_composition,
  constraint_violated,
  residual_too_large,
  non_hermitian_input,
  budget_exceeded,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for the library; the code distinguishes the
/// failure classes callers are expected to branch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace walks
