#pragma once

#include <map>

#include "walks/laurent.hpp"

namespace walks {

/// Number of closed walks of a fixed length, binned by algebraic area.
/// Zero bins are not stored.
class AreaDistribution {
 public:
  using Counts = std::map<int, BigInt>;

  // Throws Error(odd_length) for bad lengths and invalid_argument for
  // negative counts.
  AreaDistribution(int steps, Counts counts);

  int steps() const noexcept { return steps_; }
  const Counts& counts() const noexcept { return counts_; }
  BigInt count(int area) const;
  BigInt total() const;
  int max_abs_area() const;
  bool is_symmetric() const;

  /// Table convention: A = 0 maps to C(0), A > 0 maps to C(A) + C(-A).
  Counts combined() const;

  /// Sum_A C(A) Q^A.
  LaurentPoly generating_polynomial() const;

  friend bool operator==(const AreaDistribution& a, const AreaDistribution& b) {
    return a.steps_ == b.steps_ && a.counts_ == b.counts_;
  }

 private:
  int steps_;
  Counts counts_;
};

}  // namespace walks
