#pragma once

#include <span>

#include "walks/area_distribution.hpp"
#include "walks/lattice.hpp"

// Brute-force ground truth: closed walks enumerated step by step with the
// signed area tracked exactly through an integer shoelace sum.
//
// Square lattice: unit steps, one cell has doubled shoelace area 2.
// Honeycomb lattice: vertices are embedded with x scaled by 2 and y by
// 2/sqrt(3), so the six bond vectors are (2,0), (1,1), (-1,1), (-2,0),
// (-1,-1), (1,-1). Sublattice A sites use the even directions (0, 120 and
// 240 degrees), B sites the odd ones. One hexagon has doubled shoelace
// area 12.
namespace walks::oracle {

enum class Sublattice { a, b };

/// Integer position in the lattice embedding plus the honeycomb sublattice.
struct WalkPosition {
  long long x = 0;
  long long y = 0;
  Sublattice sublattice = Sublattice::a;
};

/// Doubled shoelace area of one lattice cell.
long long cell_shoelace(LatticeKind kind) noexcept;

/// Number of direction indices: 4 (E, N, W, S) or 6 (multiples of 60 degrees).
int direction_count(LatticeKind kind) noexcept;

/// Moves `pos` one step along `direction` (a multiple of 90 degrees on the
/// square lattice, of 60 degrees on the honeycomb lattice). Throws
/// Error(invalid_argument) on a direction not available at this vertex.
WalkPosition step(LatticeKind kind, const WalkPosition& pos, int direction);

/// Signed area in cells of a closed walk given as direction indices.
/// Errors: not_closed if the walk does not return to its start,
/// non_integral_area if the shoelace sum is not a whole number of cells.
long long walk_area(LatticeKind kind, std::span<const int> directions,
                    Sublattice origin = Sublattice::a);

/// Counts every closed walk of the given length from a fixed origin, binned
/// by algebraic area. Throws Error(odd_length) for odd or < 2 lengths and
/// Error(budget_exceeded) when 64-bit state counts could overflow.
AreaDistribution enumerate_closed_walks(LatticeKind kind, int steps,
                                        Sublattice origin = Sublattice::a);

/// Largest |A| with a nonzero count.
int max_area_observed(LatticeKind kind, int steps);

}  // namespace walks::oracle
