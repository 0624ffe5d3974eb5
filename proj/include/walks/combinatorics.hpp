#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walks/area_distribution.hpp"
#include "walks/composition.hpp"
#include "walks/flux.hpp"
#include "walks/lattice.hpp"
#include "walks/laurent.hpp"

// Closed-form route: cluster coefficients written as sums over integer
// compositions, with each trigonometric sum replaced by an exact binomial
// kernel in the area A.
namespace walks::combinatorics {

/// Every composition of n, shortest first and lexicographic within one
/// length. n = 0 yields the single zero composition. `max_parts` drops
/// compositions with more parts.
std::vector<Composition> compositions(int n, std::optional<int> max_parts = std::nullopt);

/// Compositions entering the honeycomb b(n): the zero composition plus every
/// composition of n' = 1..n with at most min(n', n - n' + 1) parts.
std::vector<Composition> honeycomb_compositions(int n);

/// Square-lattice coefficient
///   c(l1, ..., lj) = prod_{i<j} C(l_i + l_{i+1}, l_i) / (l_i + l_{i+1})
///                    * prod_{1<i<j} l_i,
/// and c(l1) = 1/l1. Throws zero_composition for the zero composition.
ExactRational c_coeff(const Composition& parts);

/// Honeycomb coefficient c_n(l1, ..., lj), with c_n(zero) = 1/n. Throws
/// constraint_violated if j > min(n', n - n' + 1) where n' is the total.
ExactRational cn_coeff(int n, const Composition& parts);

/// The nested m-sum of cn_coeff with its n-dependent binomial replaced by 1.
/// For a nonzero composition it reproduces c_coeff.
ExactRational cn_coeff_without_binomial(const Composition& parts);

/// Coefficients indexed by composition, for one lattice and one n.
struct CoefficientTable {
  LatticeKind lattice;
  int n;
  std::map<Composition, ExactRational> values;
};

CoefficientTable coefficient_table_square(int n);
CoefficientTable coefficient_table_honeycomb(int n);

/// K(A) with (1/q) sum_k s_{k+j-1}^{l_j} ... s_k^{l_1} = sum_A K(A) Q^A
/// whenever l1 + ... + lj < q:
///   K(A) = sum_{k_3..k_j} C(2l1, l1 + A + sum_i (i-2) k_i)
///                         C(2l2, l2 - A - sum_i (i-1) k_i)
///                         prod_{i>=3} C(2l_i, l_i + k_i),
/// with K = {0: C(2l1, l1)} for a single part. Zero entries are omitted.
std::map<int, BigInt> square_kernel(const Composition& parts);

/// Diluted-spectrum kernel: the square kernel of the odd-position parts
/// (l1, l3, ...) plus that of the even-position parts (l2, l4, ...); an
/// empty group contributes 1 at A = 0.
std::map<int, BigInt> diluted_kernel(const Composition& parts);

/// Sum_A K(A) Q^A for a kernel.
LaurentPoly kernel_polynomial(const std::map<int, BigInt>& kernel);

/// Square trigonometric sum as a Laurent polynomial reduced mod Q^q = 1.
LaurentPoly trig_sum_square(const Composition& parts, const FluxRational& flux);

/// Diluted trigonometric sum (1/q) sum_k S_{k+j-1}^{l_j} ... S_k^{l_1},
/// reduced mod Q^q = 1.
LaurentPoly trig_sum_honeycomb_diluted(const Composition& parts, const FluxRational& flux);

/// C(A) = 2n sum_{compositions of n} c * K(A), steps = 2n.
AreaDistribution area_counts_square(int steps);

/// C(A) = n sum_{honeycomb compositions} c_n * K(A), the zero composition
/// contributing 1 at A = 0.
AreaDistribution area_counts_honeycomb(int steps);

/// Counts from an explicit coefficient table (square or honeycomb
/// weighting by its lattice tag). The two functions above are this applied
/// to the stock tables.
AreaDistribution area_counts_from_table(const CoefficientTable& table);

/// Symbolic b(n) built from the coefficient table: sign (-1)^(n+1) times
/// sum_parts coeff * sum_{k=1}^{q-j} s_{k+j-1}^{l_j} ... s_k^{l_1}; the
/// honeycomb zero composition stands for sum_{k=1}^{q} s_k^0 = q. Valid when
/// n < q.
RationalLaurent cluster_coefficient_from_table(LatticeKind lattice, int n, int q);

struct SumRuleCheck {
  std::string name;
  bool passed;
  std::string detail;  // "lhs = rhs" as exact values
};

/// Evaluates every composition sum rule, Fibonacci identity and closed-walk
/// total at one n.
std::vector<SumRuleCheck> sum_rules(int n);

}  // namespace walks::combinatorics
