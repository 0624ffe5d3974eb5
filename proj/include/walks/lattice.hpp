#pragma once

#include <optional>
#include <string_view>

#include "walks/laurent.hpp"

namespace walks {

enum class LatticeKind { square, honeycomb };

std::string_view to_string(LatticeKind kind) noexcept;
std::optional<LatticeKind> parse_lattice(std::string_view name) noexcept;

/// Coordination number: 4 moves per square vertex, 3 per honeycomb vertex.
int coordination(LatticeKind kind) noexcept;

/// Throws Error(odd_length) unless steps is even and >= 2.
void require_closed_length(int steps);

/// Number of closed walks of the given length, all areas together.
BigInt closed_walk_total(LatticeKind kind, int steps);

/// Largest |A| reachable by a closed walk of the given length:
/// floor(n/2)*ceil(n/2) on the square lattice and floor((n^2+3)/12) on the
/// honeycomb lattice, with steps = 2n.
int area_bound(LatticeKind kind, int steps);

}  // namespace walks
