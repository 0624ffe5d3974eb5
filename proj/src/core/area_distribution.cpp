#include "walks/area_distribution.hpp"

#include <cstdlib>

#include "walks/lattice.hpp"

namespace walks {

AreaDistribution::AreaDistribution(int steps, Counts counts) : steps_(steps) {
  require_closed_length(steps);
  for (auto& [area, c] : counts) {
    if (c < 0) throw Error(Errc::invalid_argument, "negative walk count at area " + std::to_string(area));
    if (c != 0) counts_.emplace(area, std::move(c));
  }
}

BigInt AreaDistribution::count(int area) const {
  auto it = counts_.find(area);
  return it == counts_.end() ? BigInt(0) : it->second;
}

BigInt AreaDistribution::total() const {
  BigInt t;
  for (const auto& [area, c] : counts_) t += c;
  return t;
}

int AreaDistribution::max_abs_area() const {
  int m = 0;
  for (const auto& [area, c] : counts_) m = std::max(m, std::abs(area));
  return m;
}

bool AreaDistribution::is_symmetric() const {
  for (const auto& [area, c] : counts_) {
    if (count(-area) != c) return false;
  }
  return true;
}

AreaDistribution::Counts AreaDistribution::combined() const {
  Counts rows;
  for (const auto& [area, c] : counts_) rows[std::abs(area)] += c;
  return rows;
}

LaurentPoly AreaDistribution::generating_polynomial() const {
  LaurentPoly p;
  for (const auto& [area, c] : counts_) p.add_term(area, c);
  return p;
}

}  // namespace walks
