#pragma once

#include <compare>
#include <string>
#include <vector>

namespace walks {

/// Ordered list of positive parts (l1, ..., lj), or the distinguished zero
/// composition of 0. Part l1 is attached to the lowest lattice index.
class Composition {
 public:
  /// The composition of 0. It stores no parts.
  static Composition zero() { return Composition(); }

  /// Throws Error(invalid_argument) on an empty list or a part < 1.
  explicit Composition(std::vector<int> parts);

  bool is_zero() const noexcept { return parts_.empty(); }
  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  int total() const noexcept;
  int operator[](std::size_t i) const { return parts_[i]; }

  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;

 private:
  Composition() = default;
  std::vector<int> parts_;
};

}  // namespace walks
