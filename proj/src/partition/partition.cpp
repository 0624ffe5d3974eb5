#include "walks/partition.hpp"

#include <functional>
#include <string>

#include "walks/error.hpp"

namespace walks::partition {

namespace {

// Polynomial in an auxiliary variable w with Laurent coefficients, lowest
// power first.
using Series = std::vector<LaurentPoly>;

void accumulate(Series& into, const Series& from, std::size_t shift, const LaurentPoly& factor) {
  if (into.size() < from.size() + shift) into.resize(from.size() + shift);
  for (std::size_t i = 0; i < from.size(); ++i) into[i + shift] += from[i] * factor;
}

std::vector<LaurentPoly> alternate_signs(const Series& d, std::size_t count) {
  std::vector<LaurentPoly> z(count);
  for (std::size_t n = 0; n < count && n < d.size(); ++n) z[n] = n % 2 == 0 ? d[n] : -d[n];
  return z;
}

void require_positive_q(int q) {
  if (q < 1) throw Error(Errc::invalid_argument, "q must be >= 1, got " + std::to_string(q));
}

}  // namespace

SpectralSequence SpectralSequence::undiluted(int q) {
  require_positive_q(q);
  std::vector<LaurentPoly> levels;
  levels.reserve(static_cast<std::size_t>(q));
  for (int k = 1; k <= q; ++k) levels.push_back(spectral_function(k));
  return SpectralSequence(Kind::undiluted, q, std::move(levels));
}

SpectralSequence SpectralSequence::diluted(int q) {
  require_positive_q(q);
  std::vector<LaurentPoly> levels;
  levels.reserve(2 * static_cast<std::size_t>(q));
  for (int k = 1; k <= q; ++k) {
    levels.emplace_back(1L);
    levels.push_back(spectral_function(k));
  }
  return SpectralSequence(Kind::diluted, q, std::move(levels));
}

SpectralSequence SpectralSequence::without_top_level() const {
  std::vector<LaurentPoly> levels = levels_;
  levels.back() = LaurentPoly();
  return SpectralSequence(kind_, q_, std::move(levels));
}

PartitionSeries zn_square_recursive(int q) {
  require_positive_q(q);
  const SpectralSequence s = SpectralSequence::undiluted(q);
  Series before{LaurentPoly(1L)};  // d_{j-2}
  Series current{LaurentPoly(1L)};  // d_{j-1}
  for (int j = 2; j <= q; ++j) {
    Series next = current;
    accumulate(next, before, 1, -s.at(j - 1));
    before = std::move(current);
    current = std::move(next);
  }
  return PartitionSeries(LatticeKind::square, alternate_signs(current, static_cast<std::size_t>(q / 2) + 1));
}

LaurentPoly zn_square_nested(int q, int n) {
  require_positive_q(q);
  if (n < 0 || n > q / 2) {
    throw Error(Errc::invalid_argument, "nested Z(n) needs 0 <= n <= q/2");
  }
  if (n == 0) return LaurentPoly(1L);
  const SpectralSequence s = SpectralSequence::undiluted(q);
  const int top = q - 2 * n + 1;
  // inner[b] = sum over the remaining (deeper) indices when the enclosing
  // index equals b; starts as the empty product.
  std::vector<LaurentPoly> inner(static_cast<std::size_t>(top) + 1, LaurentPoly(1L));
  for (int level = n; level >= 1; --level) {
    const int offset = 2 * (n - level);
    std::vector<LaurentPoly> outer(static_cast<std::size_t>(top) + 1);
    for (int b = 1; b <= top; ++b) {
      outer[b] = outer[b - 1] + s.at(b + offset) * inner[b];
    }
    inner = std::move(outer);
  }
  return inner[static_cast<std::size_t>(top)];
}

PartitionSeries zn_honeycomb_recursive(const SpectralSequence& levels) {
  if (levels.kind() != SpectralSequence::Kind::undiluted) {
    throw Error(Errc::invalid_argument, "honeycomb recursion runs on the undiluted spectrum");
  }
  const int q = levels.q();
  Series before;                    // d_{j-2}, starts as d_{-1} = 0
  Series current{LaurentPoly(1L)};  // d_{j-1}, starts as d_0 = 1
  for (int j = 1; j <= q; ++j) {
    Series next = current;
    accumulate(next, current, 1, -(LaurentPoly(1L) + levels.at(j)));
    if (j >= 2) accumulate(next, before, 2, -levels.at(j - 1));
    before = std::move(current);
    current = std::move(next);
  }
  return PartitionSeries(LatticeKind::honeycomb, alternate_signs(current, static_cast<std::size_t>(q) + 1));
}

PartitionSeries zn_honeycomb_recursive(int q) { return zn_honeycomb_recursive(SpectralSequence::undiluted(q)); }

std::vector<LaurentPoly> exclusion_coefficients(const SpectralSequence& levels) {
  // Z over levels 1..m = Z over 1..m-1 (level m empty)
  //                    + x S_m Z over 1..m-2 (level m filled, m-1 blocked)
  Series before{LaurentPoly(1L)};
  Series current{LaurentPoly(1L)};
  for (int m = 1; m <= static_cast<int>(levels.size()); ++m) {
    Series next = current;
    accumulate(next, before, 1, levels.at(m));
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

PartitionSeries zn_diluted(int q) {
  std::vector<LaurentPoly> z = exclusion_coefficients(SpectralSequence::diluted(q));
  z.resize(static_cast<std::size_t>(q) + 1);
  return PartitionSeries(LatticeKind::honeycomb, std::move(z));
}

std::vector<FactorWord> honeycomb_factor_words(int q, int n) {
  require_positive_q(q);
  if (n < 0) throw Error(Errc::invalid_argument, "n must be >= 0");
  std::vector<FactorWord> words;
  std::vector<Factor> stack;
  // min_index: smallest index allowed for the next factor to the left.
  std::function<void(int, int, int)> extend = [&](int remaining, int min_index, int s_count) {
    if (remaining == 0) {
      words.push_back({stack, s_count % 2 == 0 ? 1 : -1});
      return;
    }
    for (int k = min_index; k <= q; ++k) {
      stack.push_back({Factor::Type::one_plus_s, k});
      extend(remaining - 1, k + 1, s_count);
      stack.pop_back();
      if (remaining >= 2 && k <= q - 1) {
        stack.push_back({Factor::Type::s, k});
        extend(remaining - 2, k + 2, s_count + 1);
        stack.pop_back();
      }
    }
  };
  extend(n, 1, 0);
  return words;
}

LaurentPoly sum_factor_words(const std::vector<FactorWord>& words) {
  LaurentPoly total;
  for (const FactorWord& w : words) {
    LaurentPoly term(static_cast<long>(w.sign));
    for (const Factor& f : w.factors) {
      term *= f.type == Factor::Type::s ? spectral_function(f.index) : LaurentPoly(1L) + spectral_function(f.index);
    }
    total += term;
  }
  return total;
}

std::vector<RationalLaurent> cluster_coefficients(const PartitionSeries& series, int nmax) {
  if (nmax < 1) throw Error(Errc::invalid_argument, "nmax must be >= 1");
  if (series[0] != LaurentPoly(1L)) throw Error(Errc::invalid_argument, "grand partition series needs Z(0) = 1");
  std::vector<RationalLaurent> z(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) z[n] = to_rational(series[static_cast<std::size_t>(n)]);

  std::vector<RationalLaurent> b(static_cast<std::size_t>(nmax) + 1);
  for (int n = 1; n <= nmax; ++n) {
    RationalLaurent acc;
    for (int k = 1; k < n; ++k) acc += (b[k] * z[n - k]).scaled(ExactRational(k));
    b[n] = z[n] - acc.scaled(ExactRational(1, n));
  }
  return b;
}

RationalLaurent trace_from_cluster(LatticeKind lattice, const std::vector<RationalLaurent>& b, int n, int q) {
  if (n < 1 || n >= static_cast<int>(b.size())) throw Error(Errc::invalid_argument, "cluster coefficient out of range");
  const long weight = lattice == LatticeKind::square ? 2L * n : n;
  ExactRational factor(n % 2 == 1 ? weight : -weight, q);
  factor.canonicalize();
  return b[n].scaled(factor);
}

}  // namespace walks::partition
