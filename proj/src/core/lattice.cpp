#include "walks/lattice.hpp"

#include <string>

#include "walks/numeric.hpp"

namespace walks {

std::string_view to_string(LatticeKind kind) noexcept {
  return kind == LatticeKind::square ? "square" : "honeycomb";
}

std::optional<LatticeKind> parse_lattice(std::string_view name) noexcept {
  if (name == "square") return LatticeKind::square;
  if (name == "honeycomb") return LatticeKind::honeycomb;
  return std::nullopt;
}

int coordination(LatticeKind kind) noexcept { return kind == LatticeKind::square ? 4 : 3; }

void require_closed_length(int steps) {
  if (steps < 2 || steps % 2 != 0) {
    throw Error(Errc::odd_length,
                "closed walks need an even length >= 2, got " + std::to_string(steps));
  }
}

BigInt closed_walk_total(LatticeKind kind, int steps) {
  require_closed_length(steps);
  const long n = steps / 2;
  if (kind == LatticeKind::square) {
    BigInt c = binomial(2 * n, n);
    return c * c;
  }
  BigInt total;
  for (long m = 0; m <= n; ++m) {
    BigInt c = binomial(n, m);
    total += c * c * binomial(2 * m, m);
  }
  return total;
}

int area_bound(LatticeKind kind, int steps) {
  require_closed_length(steps);
  const int n = steps / 2;
  if (kind == LatticeKind::square) return (n / 2) * ((n + 1) / 2);
  return (n * n + 3) / 12;
}

}  // namespace walks
