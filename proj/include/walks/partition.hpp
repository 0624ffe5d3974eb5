#pragma once

#include <vector>

#include "walks/lattice.hpp"
#include "walks/laurent.hpp"

// Exclusion-statistics route. The secular determinants of the square and
// honeycomb Hamiltonians are grand partition functions of particles on a
// chain of levels with Boltzmann factors s_k; their coefficients Z(n) and
// cluster coefficients b(n) are computed here as exact polynomials in Q.
namespace walks::partition {

/// One-body spectrum. Undiluted: s_1, ..., s_q. Diluted: 1, s_1, 1, s_2,
/// ..., 1, s_q (2q levels).
class SpectralSequence {
 public:
  enum class Kind { undiluted, diluted };

  static SpectralSequence undiluted(int q);
  static SpectralSequence diluted(int q);

  /// Copy with the top level s_q replaced by 0. At any primitive q-th root
  /// s_q vanishes, and several closed forms are stated under that
  /// substitution.
  SpectralSequence without_top_level() const;

  Kind kind() const noexcept { return kind_; }
  int q() const noexcept { return q_; }
  std::size_t size() const noexcept { return levels_.size(); }
  /// 1-based level access, matching s_k / S_k indexing.
  const LaurentPoly& at(int k) const { return levels_.at(static_cast<std::size_t>(k - 1)); }

 private:
  SpectralSequence(Kind kind, int q, std::vector<LaurentPoly> levels)
      : kind_(kind), q_(q), levels_(std::move(levels)) {}
  Kind kind_;
  int q_;
  std::vector<LaurentPoly> levels_;
};

/// Z(0), Z(1), ... for one lattice and one q. Z(0) = 1; entries past the end
/// are zero.
class PartitionSeries {
 public:
  PartitionSeries(LatticeKind lattice, std::vector<LaurentPoly> z) : lattice_(lattice), z_(std::move(z)) {}

  LatticeKind lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return z_.size(); }
  LaurentPoly operator[](std::size_t n) const { return n < z_.size() ? z_[n] : LaurentPoly(); }
  const std::vector<LaurentPoly>& values() const noexcept { return z_; }

  friend bool operator==(const PartitionSeries&, const PartitionSeries&) = default;

 private:
  LatticeKind lattice_;
  std::vector<LaurentPoly> z_;
};

/// Square lattice: d_0 = d_1 = 1, d_j = d_{j-1} - z^2 s_{j-1} d_{j-2};
/// Z(n) = (-1)^n [z^{2n}] d_q for n = 0..floor(q/2).
PartitionSeries zn_square_recursive(int q);

/// Square lattice nested sum
///   Z(n) = sum_{k1=1}^{q-2n+1} sum_{k2=1}^{k1} ... sum_{kn=1}^{k(n-1)}
///          s_{k1+2n-2} s_{k2+2n-4} ... s_{kn}.
/// Requires 0 <= n <= floor(q/2).
LaurentPoly zn_square_nested(int q, int n);

/// Honeycomb lattice: d_0 = 1, d_{-1} = 0,
/// d_j = (1 - (1 + s_j) z^2) d_{j-1} - z^4 s_{j-1} d_{j-2};
/// Z(n) = (-1)^n [z^{2n}] d_q for n = 0..q.
PartitionSeries zn_honeycomb_recursive(int q);

/// Same recursion driven by an explicit undiluted spectrum (e.g. one with
/// the top level removed).
PartitionSeries zn_honeycomb_recursive(const SpectralSequence& levels);

/// g = 2 exclusion (no two adjacent levels occupied) on the diluted
/// spectrum; Z(n) is the n-particle coefficient, n = 0..q.
PartitionSeries zn_diluted(int q);

/// Coefficients of an exclusion grand partition function on an arbitrary
/// sequence of levels; the backbone of zn_diluted.
std::vector<LaurentPoly> exclusion_coefficients(const SpectralSequence& levels);

/// One factor of a honeycomb Z(n) term: (1 + s_k) or s_k.
struct Factor {
  enum class Type { one_plus_s, s };
  Type type;
  int index;
  bool operator==(const Factor&) const = default;
};

/// A nested-sum term of Z(n) with its sign; factors listed right to left
/// (lowest index first).
struct FactorWord {
  std::vector<Factor> factors;
  int sign;
};

/// Every term of the honeycomb Z(n) in (1 + s_k) / s_k form: factor weights
/// 1 and 2 add up to n; the factor left of an s_j has index >= j + 2, the
/// factor left of a (1 + s_j) has index >= j + 1; (1 + s) factors use
/// indices up to q and s factors up to q - 1; the sign is (-1)^(number of s
/// factors).
std::vector<FactorWord> honeycomb_factor_words(int q, int n);

/// Sum of the honeycomb_factor_words terms as a polynomial in Q.
LaurentPoly sum_factor_words(const std::vector<FactorWord>& words);

/// b(1..nmax) of log(sum_n Z(n) x^n) = sum_n b(n) x^n via
/// n Z(n) = sum_{k=1}^{n} k b(k) Z(n-k). Index 0 of the result is unused
/// and holds 0.
std::vector<RationalLaurent> cluster_coefficients(const PartitionSeries& series, int nmax);

/// (1/q) tr(H^steps) predicted by the cluster coefficients:
/// square 2n (-1)^(n+1) b(n)/q, honeycomb n (-1)^(n+1) b(n)/q, steps = 2n.
/// Valid for matrix powers below q.
RationalLaurent trace_from_cluster(LatticeKind lattice, const std::vector<RationalLaurent>& b, int n, int q);

}  // namespace walks::partition
