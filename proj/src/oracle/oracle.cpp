#include "walks/oracle.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <vector>

#include "walks/error.hpp"
#include "walks/parallel.hpp"

namespace walks::oracle {

namespace {

struct Vec2 {
  int dx;
  int dy;
};

constexpr std::array<Vec2, 4> kSquareSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
constexpr std::array<Vec2, 6> kHexSteps{{{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}}};

// Largest length whose raw path count coordination^steps fits in int64.
int max_supported_steps(LatticeKind kind) { return kind == LatticeKind::square ? 31 : 39; }

bool direction_allowed(LatticeKind kind, Sublattice s, int direction) {
  if (direction < 0 || direction >= direction_count(kind)) return false;
  if (kind == LatticeKind::square) return true;
  return (direction % 2 == 0) == (s == Sublattice::a);
}

Vec2 vector_of(LatticeKind kind, int direction) {
  return kind == LatticeKind::square ? kSquareSteps[static_cast<std::size_t>(direction)]
                                     : kHexSteps[static_cast<std::size_t>(direction)];
}

// Can a walk at (x, y) still reach the origin in `remaining` steps?
bool reachable(LatticeKind kind, long long x, long long y, int remaining) {
  const long long ax = std::llabs(x);
  const long long ay = std::llabs(y);
  if (kind == LatticeKind::square) return ax + ay <= remaining;
  return ay <= remaining && ax + ay <= 2LL * remaining;
}

struct State {
  int x;
  int y;
  long long shoelace;
  bool operator==(const State&) const = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(s.x);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(s.y);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(s.shoelace);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

using Layer = std::unordered_map<State, std::uint64_t, StateHash>;

// Dynamic programming over (position, accumulated shoelace) states. The
// sublattice is implied by the parity of the step index.
std::map<long long, std::uint64_t> run_layers(LatticeKind kind, State start, Sublattice start_sub,
                                              int remaining) {
  Layer layer{{start, 1}};
  Sublattice sub = start_sub;
  for (int r = remaining; r > 0; --r) {
    Layer next;
    next.reserve(layer.size() * 2);
    for (const auto& [s, count] : layer) {
      for (int d = 0; d < direction_count(kind); ++d) {
        if (!direction_allowed(kind, sub, d)) continue;
        const Vec2 v = vector_of(kind, d);
        const State t{s.x + v.dx, s.y + v.dy,
                      s.shoelace + static_cast<long long>(s.x) * v.dy - static_cast<long long>(s.y) * v.dx};
        if (!reachable(kind, t.x, t.y, r - 1)) continue;
        next[t] += count;
      }
    }
    layer = std::move(next);
    if (kind == LatticeKind::honeycomb) sub = sub == Sublattice::a ? Sublattice::b : Sublattice::a;
  }
  std::map<long long, std::uint64_t> by_shoelace;
  for (const auto& [s, count] : layer) {
    if (s.x == 0 && s.y == 0) by_shoelace[s.shoelace] += count;
  }
  return by_shoelace;
}

long long exact_cells(LatticeKind kind, long long shoelace) {
  const long long cell = cell_shoelace(kind);
  if (shoelace % cell != 0) {
    throw Error(Errc::non_integral_area,
                "shoelace sum " + std::to_string(shoelace) + " is not a multiple of " + std::to_string(cell));
  }
  return shoelace / cell;
}

}  // namespace

long long cell_shoelace(LatticeKind kind) noexcept { return kind == LatticeKind::square ? 2 : 12; }

int direction_count(LatticeKind kind) noexcept { return kind == LatticeKind::square ? 4 : 6; }

WalkPosition step(LatticeKind kind, const WalkPosition& pos, int direction) {
  if (!direction_allowed(kind, pos.sublattice, direction)) {
    throw Error(Errc::invalid_argument,
                "direction " + std::to_string(direction) + " is not available at this vertex");
  }
  const Vec2 v = vector_of(kind, direction);
  WalkPosition next{pos.x + v.dx, pos.y + v.dy, pos.sublattice};
  if (kind == LatticeKind::honeycomb) {
    next.sublattice = pos.sublattice == Sublattice::a ? Sublattice::b : Sublattice::a;
  }
  return next;
}

long long walk_area(LatticeKind kind, std::span<const int> directions, Sublattice origin) {
  WalkPosition pos{0, 0, origin};
  long long shoelace = 0;
  for (int d : directions) {
    const WalkPosition next = step(kind, pos, d);
    shoelace += pos.x * next.y - next.x * pos.y;
    pos = next;
  }
  if (pos.x != 0 || pos.y != 0) throw Error(Errc::not_closed, "walk does not return to its start");
  return exact_cells(kind, shoelace);
}

AreaDistribution enumerate_closed_walks(LatticeKind kind, int steps, Sublattice origin) {
  require_closed_length(steps);
  if (steps > max_supported_steps(kind)) {
    throw Error(Errc::budget_exceeded, "oracle supports at most " +
                                           std::to_string(max_supported_steps(kind)) + " steps on the " +
                                           std::string(to_string(kind)) + " lattice");
  }

  // Split the state space by first step; each branch is an independent DP.
  std::vector<int> first_steps;
  for (int d = 0; d < direction_count(kind); ++d) {
    if (direction_allowed(kind, origin, d)) first_steps.push_back(d);
  }
  const Sublattice second_sub =
      kind == LatticeKind::honeycomb ? (origin == Sublattice::a ? Sublattice::b : Sublattice::a) : origin;

  std::vector<std::map<long long, std::uint64_t>> partial(first_steps.size());
  parallel_for(first_steps.size(), [&](std::size_t i) {
    const Vec2 v = vector_of(kind, first_steps[i]);
    partial[i] = run_layers(kind, State{v.dx, v.dy, 0}, second_sub, steps - 1);
  });

  AreaDistribution::Counts counts;
  for (const auto& branch : partial) {
    for (const auto& [shoelace, c] : branch) {
      counts[static_cast<int>(exact_cells(kind, shoelace))] += BigInt(static_cast<unsigned long>(c));
    }
  }
  return AreaDistribution(steps, std::move(counts));
}

int max_area_observed(LatticeKind kind, int steps) { return enumerate_closed_walks(kind, steps).max_abs_area(); }

}  // namespace walks::oracle
