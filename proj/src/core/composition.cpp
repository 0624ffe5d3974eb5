#include "walks/composition.hpp"

#include <numeric>

#include "walks/error.hpp"

namespace walks {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::invalid_argument, "use Composition::zero() for the empty composition");
  for (int l : parts_) {
    if (l < 1) throw Error(Errc::invalid_argument, "composition parts must be >= 1");
  }
}

int Composition::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

}  // namespace walks
