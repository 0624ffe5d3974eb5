#pragma once

// Independent reference computations used only by the tests. None of these
// call into the routes they check: walks are enumerated by plain DFS with
// floating-point geometry, trigonometric sums are summed term by term, and
// cluster coefficients come from a multivariate power-series logarithm in
// formal symbols s_1, s_2, ...

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "walks/area_distribution.hpp"
#include "walks/composition.hpp"
#include "walks/lattice.hpp"
#include "walks/laurent.hpp"

namespace walks::test {

// ---------------------------------------------------------------------------
// Published tables: steps -> (|A| -> C(A) + C(-A), with C(0) for A = 0).

inline const std::map<int, std::map<int, long>>& honeycomb_table() {
  static const std::map<int, std::map<int, long>> t{
      {2, {{0, 3}}},
      {4, {{0, 15}}},
      {6, {{0, 87}, {1, 6}}},
      {8, {{0, 543}, {1, 96}}},
      {10, {{0, 3543}, {1, 1080}, {2, 30}}},
      {12, {{0, 23859}, {1, 10560}, {2, 726}, {3, 24}}},
      {14, {{0, 164769}, {1, 96096}, {2, 11130}, {3, 798}, {4, 42}}},
  };
  return t;
}

inline const std::map<int, long>& honeycomb_table_totals() {
  static const std::map<int, long> t{{2, 3}, {4, 15}, {6, 93}, {8, 639}, {10, 4653}, {12, 35169}, {14, 272835}};
  return t;
}

inline const std::map<int, std::map<int, long>>& square_table() {
  static const std::map<int, std::map<int, long>> t{
      {2, {{0, 4}}},
      {4, {{0, 28}, {1, 8}}},
      {6, {{0, 232}, {1, 144}, {2, 24}}},
      {8, {{0, 2156}, {1, 2016}, {2, 616}, {3, 96}, {4, 16}}},
      {10, {{0, 21944}, {1, 26320}, {2, 11080}, {3, 3120}, {4, 840}, {5, 160}, {6, 40}}},
  };
  return t;
}

inline const std::map<int, long>& square_table_totals() {
  static const std::map<int, long> t{{2, 4}, {4, 36}, {6, 400}, {8, 4900}, {10, 63504}};
  return t;
}

// ---------------------------------------------------------------------------
// Published trace expressions: (1/q) tr = factor * (c_0 + sum_A c_A cos(2 pi A p/q)).

struct TraceExpression {
  LatticeKind lattice;
  int half_length;  // walks of length 2n
  long factor;
  std::vector<long> cosine_coefficients;

  double evaluate(int p, int q) const {
    double sum = 0;
    for (std::size_t a = 0; a < cosine_coefficients.size(); ++a) {
      sum += static_cast<double>(cosine_coefficients[a]) *
             std::cos(2.0 * std::numbers::pi * static_cast<double>(a) * p / q);
    }
    return static_cast<double>(factor) * sum;
  }
};

inline const std::vector<TraceExpression>& trace_expressions() {
  static const std::vector<TraceExpression> list{
      {LatticeKind::honeycomb, 1, 1, {3}},
      {LatticeKind::honeycomb, 2, 1, {15}},
      {LatticeKind::honeycomb, 3, 3, {29, 2}},
      {LatticeKind::honeycomb, 4, 3, {181, 32}},
      {LatticeKind::honeycomb, 5, 3, {1181, 360, 10}},
      {LatticeKind::honeycomb, 6, 3, {7953, 3520, 242, 8}},
      {LatticeKind::honeycomb, 7, 3, {54923, 32032, 3710, 266, 14}},
      {LatticeKind::square, 1, 1, {4}},
      {LatticeKind::square, 2, 4, {7, 2}},
      {LatticeKind::square, 3, 4, {58, 36, 6}},
      {LatticeKind::square, 4, 4, {539, 504, 154, 24, 4}},
      {LatticeKind::square, 5, 4, {5486, 6580, 2770, 780, 210, 40, 10}},
  };
  return list;
}

/// The 20-step square walk of the introductory figure (E=0, N=1, W=2, S=3).
inline const std::vector<int>& figure_square_walk() {
  static const std::vector<int> w{0, 0, 1, 1, 2, 3, 3, 3, 0, 3, 2, 2, 2, 1, 1, 1, 2, 3, 0, 0};
  return w;
}

// ---------------------------------------------------------------------------
// Brute-force walk enumeration in real coordinates.

namespace detail {

struct Geometry {
  std::vector<std::complex<double>> a_steps;  // moves available from the start vertex class
  std::vector<std::complex<double>> b_steps;  // moves from the other class (square: same)
  double cell_area;
  double max_step;
};

inline Geometry geometry(LatticeKind kind) {
  using C = std::complex<double>;
  if (kind == LatticeKind::square) {
    std::vector<C> s{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return {s, s, 1.0, 1.0};
  }
  // Unit bonds; A sites point up / lower-left / lower-right, B sites the
  // opposite way. One hexagon has area 3 sqrt(3) / 2.
  std::vector<C> a;
  std::vector<C> b;
  for (int i = 0; i < 3; ++i) {
    const double t = std::numbers::pi / 2 + 2 * std::numbers::pi * i / 3;
    a.push_back(std::polar(1.0, t));
    b.push_back(-std::polar(1.0, t));
  }
  return {a, b, 1.5 * std::sqrt(3.0), 1.0};
}

inline void dfs(const Geometry& g, int remaining, bool on_a, std::complex<double> pos, double twice_area,
                std::map<int, long long>& out) {
  if (remaining == 0) {
    if (std::abs(pos) > 1e-9) return;
    const double cells = twice_area / (2 * g.cell_area);
    const double rounded = std::round(cells);
    if (std::abs(cells - rounded) > 1e-6) throw std::logic_error("non-integral brute-force area");
    ++out[static_cast<int>(rounded)];
    return;
  }
  if (std::abs(pos) > remaining * g.max_step + 1e-9) return;
  for (const auto& d : on_a ? g.a_steps : g.b_steps) {
    const std::complex<double> next = pos + d;
    // doubled shoelace increment x1*y2 - x2*y1
    const double inc = pos.real() * next.imag() - next.real() * pos.imag();
    dfs(g, remaining - 1, !on_a, next, twice_area + inc, out);
  }
}

}  // namespace detail

/// Counts closed walks by plain depth-first search; lengths up to about 12.
inline AreaDistribution brute_force_closed_walks(LatticeKind kind, int steps) {
  std::map<int, long long> raw;
  detail::dfs(detail::geometry(kind), steps, true, {0, 0}, 0.0, raw);
  AreaDistribution::Counts counts;
  for (const auto& [a, c] : raw) counts[a] = BigInt(static_cast<long>(c));
  return AreaDistribution(steps, counts);
}

// ---------------------------------------------------------------------------
// Direct trigonometric sums, as polynomials in Q (not divided by q).

/// sum_{k=1}^{q-j} s_{k+j-1}^{l_j} ... s_k^{l_1}
inline LaurentPoly direct_square_sum(const Composition& parts, int q) {
  const int j = static_cast<int>(parts.size());
  LaurentPoly total;
  for (int k = 1; k <= q - j; ++k) {
    LaurentPoly term(1L);
    for (int i = 0; i < j; ++i) {
      const LaurentPoly s = LaurentPoly(2L) - LaurentPoly::monomial(k + i) - LaurentPoly::monomial(-(k + i));
      for (int e = 0; e < parts[static_cast<std::size_t>(i)]; ++e) term *= s;
    }
    total += term;
  }
  return total;
}

/// The diluted level S_m: 1 for odd m, s_{m/2} for even m.
inline LaurentPoly diluted_level(int m) {
  if (m % 2 == 1) return LaurentPoly(1L);
  const int k = m / 2;
  return LaurentPoly(2L) - LaurentPoly::monomial(k) - LaurentPoly::monomial(-k);
}

/// sum_{k=1}^{2q-j+1} S_{k+j-1}^{l_j} ... S_k^{l_1}
inline LaurentPoly direct_diluted_sum(const Composition& parts, int q) {
  const int j = static_cast<int>(parts.size());
  LaurentPoly total;
  for (int k = 1; k <= 2 * q - j + 1; ++k) {
    LaurentPoly term(1L);
    for (int i = 0; i < j; ++i) {
      for (int e = 0; e < parts[static_cast<std::size_t>(i)]; ++e) term *= diluted_level(k + i);
    }
    total += term;
  }
  return total;
}

/// Sum over all n-element sets of pairwise non-adjacent levels of the
/// product of their weights, by listing subsets.
inline LaurentPoly exhaustive_exclusion(const std::vector<LaurentPoly>& levels, int n) {
  const int m = static_cast<int>(levels.size());
  LaurentPoly total;
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    if (__builtin_popcount(mask) != n || (mask & (mask >> 1U)) != 0) continue;
    LaurentPoly term(1L);
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) term *= levels[static_cast<std::size_t>(i)];
    }
    total += term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Multivariate polynomials in formal symbols s_1..s_L, exact rational
// coefficients; enough to take a truncated logarithm.

class SymbolPoly {
 public:
  using Key = std::vector<int>;  // exponent of s_1..s_L

  explicit SymbolPoly(int symbols) : symbols_(symbols) {}

  static SymbolPoly constant(int symbols, const ExactRational& c) {
    SymbolPoly p(symbols);
    p.add(Key(static_cast<std::size_t>(symbols), 0), c);
    return p;
  }
  /// s_k, 1-based.
  static SymbolPoly symbol(int symbols, int k) {
    SymbolPoly p(symbols);
    Key key(static_cast<std::size_t>(symbols), 0);
    key[static_cast<std::size_t>(k - 1)] = 1;
    p.add(key, ExactRational(1));
    return p;
  }

  void add(const Key& key, const ExactRational& c) {
    if (c == 0) return;
    ExactRational& slot = terms_[key];
    slot += c;
    if (slot == 0) terms_.erase(key);
  }

  SymbolPoly operator+(const SymbolPoly& o) const {
    SymbolPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
  }
  SymbolPoly operator*(const SymbolPoly& o) const {
    SymbolPoly r(symbols_);
    for (const auto& [ka, ca] : terms_) {
      for (const auto& [kb, cb] : o.terms_) {
        Key k(ka.size());
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
        r.add(k, ExactRational(ca * cb));
      }
    }
    return r;
  }
  SymbolPoly scaled(const ExactRational& f) const {
    SymbolPoly r(symbols_);
    for (const auto& [k, c] : terms_) r.add(k, ExactRational(c * f));
    return r;
  }

  ExactRational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? ExactRational(0) : it->second;
  }
  const std::map<Key, ExactRational>& terms() const { return terms_; }
  int symbols() const { return symbols_; }

 private:
  int symbols_;
  std::map<Key, ExactRational> terms_;
};

/// Level weights of a chain: each entry is 0 (weight 1) or a symbol index.
/// Returns b(1..nmax) of log(sum_n Z(n) x^n), where Z(n) sums products over
/// n pairwise non-adjacent levels, via log(1 + u) = sum (-1)^(m+1) u^m / m.
inline std::vector<SymbolPoly> symbolic_cluster_series(const std::vector<int>& level_symbols, int symbols, int nmax) {
  auto weight = [&](int level) {
    const int s = level_symbols[static_cast<std::size_t>(level)];
    return s == 0 ? SymbolPoly::constant(symbols, ExactRational(1)) : SymbolPoly::symbol(symbols, s);
  };
  using Series = std::vector<SymbolPoly>;
  auto zero_series = [&] { return Series(static_cast<std::size_t>(nmax) + 1, SymbolPoly(symbols)); };

  // Z over the first m levels, by whether level m is occupied; truncated.
  Series before = zero_series();
  before[0] = SymbolPoly::constant(symbols, ExactRational(1));
  Series current = before;
  for (std::size_t m = 0; m < level_symbols.size(); ++m) {
    Series next = current;
    const SymbolPoly w = weight(static_cast<int>(m));
    for (int n = 1; n <= nmax; ++n) next[n] = next[n] + before[n - 1] * w;
    before = current;
    current = next;
  }

  Series u = current;
  u[0] = SymbolPoly(symbols);
  Series power = u;
  Series log = zero_series();
  for (int m = 1; m <= nmax; ++m) {
    const ExactRational f(m % 2 == 1 ? 1 : -1, m);
    for (int n = 1; n <= nmax; ++n) log[n] = log[n] + power[n].scaled(f);
    Series next = zero_series();
    for (int a = 1; a <= nmax; ++a) {
      for (int b = 1; a + b <= nmax; ++b) next[a + b] = next[a + b] + power[a] * u[b];
    }
    power = next;
  }
  return log;
}

/// Key of s_k^{l_1} s_{k+1}^{l_2} ... for one composition.
inline SymbolPoly::Key window_key(int symbols, int k, const Composition& parts) {
  SymbolPoly::Key key(static_cast<std::size_t>(symbols), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) key[static_cast<std::size_t>(k - 1) + i] = parts[i];
  return key;
}

}  // namespace walks::test
