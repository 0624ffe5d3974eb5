#include "walks/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "walks/error.hpp"
#include "walks/numeric.hpp"

namespace walks::combinatorics {

namespace {

void require_non_negative(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "n must be >= 0, got " + std::to_string(n));
}

void compositions_with_parts(int n, int parts, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (parts == 1) {
    prefix.push_back(n);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 1; first <= n - (parts - 1); ++first) {
    prefix.push_back(first);
    compositions_with_parts(n - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

// Part-count bound of the honeycomb sums.
int honeycomb_max_parts(int n, int n_prime) { return std::min(n_prime, n - n_prime + 1); }

ExactRational ratio(const BigInt& num, const BigInt& den) {
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

void add_into(std::map<int, BigInt>& into, const std::map<int, BigInt>& from) {
  for (const auto& [a, c] : from) into[a] += c;
}

void drop_zeros(std::map<int, BigInt>& kernel) {
  std::erase_if(kernel, [](const auto& kv) { return kv.second == 0; });
}

// Shared m-sum of the honeycomb coefficient; `with_binomial` selects whether
// the n-dependent binomial is kept.
ExactRational cn_sum(int n, const std::vector<int>& l, bool with_binomial) {
  const int j = static_cast<int>(l.size());
  const int total = std::accumulate(l.begin(), l.end(), 0);
  BigInt sum = 0;
  std::function<void(int, int, BigInt)> nest = [&](int i, int m_total, BigInt weight) {
    if (i == j - 1) {
      if (with_binomial) weight *= binomial(n + total - m_total - 1, 2L * total - 1);
      sum += weight;
      return;
    }
    // m_i = 0 kills the product through the factor m_i, so start at 1.
    for (int mi = 1; mi <= std::min(l[i], l[i + 1]); ++mi) {
      BigInt w = weight * mi * binomial(l[i], mi) * binomial(l[i + 1], mi);
      nest(i + 1, m_total + mi, w);
    }
  };
  nest(0, 0, BigInt(1));
  BigInt denominator = 1;
  for (int part : l) denominator *= part;
  return ratio(sum, denominator);
}

}  // namespace

std::vector<Composition> compositions(int n, std::optional<int> max_parts) {
  require_non_negative(n);
  if (n == 0) return {Composition::zero()};
  const int limit = max_parts ? std::min(*max_parts, n) : n;
  std::vector<Composition> out;
  std::vector<int> prefix;
  for (int parts = 1; parts <= limit; ++parts) compositions_with_parts(n, parts, prefix, out);
  return out;
}

std::vector<Composition> honeycomb_compositions(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "honeycomb compositions need n >= 1");
  std::vector<Composition> out{Composition::zero()};
  for (int n_prime = 1; n_prime <= n; ++n_prime) {
    for (Composition& c : compositions(n_prime, honeycomb_max_parts(n, n_prime))) out.push_back(std::move(c));
  }
  return out;
}

ExactRational c_coeff(const Composition& parts) {
  if (parts.is_zero()) throw Error(Errc::zero_composition, "c(l1, ..., lj) is undefined for the zero composition");
  const std::size_t j = parts.size();
  if (j == 1) return ratio(BigInt(1), BigInt(parts[0]));
  ExactRational c(1);
  for (std::size_t i = 0; i + 1 < j; ++i) {
    const int pair = parts[i] + parts[i + 1];
    c *= ratio(binomial(pair, parts[i]), BigInt(pair));
    if (i > 0) c *= parts[i];
  }
  return c;
}

ExactRational cn_coeff(int n, const Composition& parts) {
  if (n < 1) throw Error(Errc::invalid_argument, "c_n needs n >= 1");
  if (parts.is_zero()) return ratio(BigInt(1), BigInt(n));
  const int n_prime = parts.total();
  const int j = static_cast<int>(parts.size());
  if (j > honeycomb_max_parts(n, n_prime)) {
    throw Error(Errc::constraint_violated, "c_" + std::to_string(n) + parts.to_string() + " needs j <= min(n', n - n' + 1)");
  }
  return cn_sum(n, parts.parts(), true);
}

ExactRational cn_coeff_without_binomial(const Composition& parts) {
  if (parts.is_zero()) throw Error(Errc::zero_composition, "the stripped c_n sum needs a nonzero composition");
  return cn_sum(0, parts.parts(), false);
}

CoefficientTable coefficient_table_square(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "coefficient table needs n >= 1");
  CoefficientTable table{LatticeKind::square, n, {}};
  for (const Composition& c : compositions(n)) table.values.emplace(c, c_coeff(c));
  return table;
}

CoefficientTable coefficient_table_honeycomb(int n) {
  CoefficientTable table{LatticeKind::honeycomb, n, {}};
  for (const Composition& c : honeycomb_compositions(n)) table.values.emplace(c, cn_coeff(n, c));
  return table;
}

std::map<int, BigInt> square_kernel(const Composition& parts) {
  if (parts.is_zero()) throw Error(Errc::zero_composition, "the kernel needs a nonzero composition");
  const std::vector<int>& l = parts.parts();
  const int j = static_cast<int>(l.size());
  std::map<int, BigInt> kernel;
  if (j == 1) {
    kernel[0] = binomial(2L * l[0], l[0]);
    return kernel;
  }
  // Outer sums over k_3..k_j; shift1 and shift2 collect the k-dependent
  // offsets of the first two binomials.
  std::function<void(int, long, long, BigInt)> nest = [&](int i, long shift1, long shift2, BigInt weight) {
    if (i == j) {
      for (long a = -l[0] - shift1; a <= l[0] - shift1; ++a) {
        BigInt term = weight * binomial(2L * l[0], l[0] + a + shift1) * binomial(2L * l[1], l[1] - a - shift2);
        if (term != 0) kernel[static_cast<int>(a)] += term;
      }
      return;
    }
    const int li = l[static_cast<std::size_t>(i)];
    const long position = i + 1;  // 1-based index of this part
    for (int k = -li; k <= li; ++k) {
      BigInt w = weight * binomial(2L * li, li + k);
      nest(i + 1, shift1 + (position - 2) * k, shift2 + (position - 1) * k, w);
    }
  };
  nest(2, 0, 0, BigInt(1));
  drop_zeros(kernel);
  return kernel;
}

std::map<int, BigInt> diluted_kernel(const Composition& parts) {
  if (parts.is_zero()) throw Error(Errc::zero_composition, "the kernel needs a nonzero composition");
  std::vector<int> odd;
  std::vector<int> even;
  for (std::size_t i = 0; i < parts.size(); ++i) (i % 2 == 0 ? odd : even).push_back(parts[i]);
  std::map<int, BigInt> kernel = square_kernel(Composition(odd));
  if (even.empty()) {
    kernel[0] += 1;
  } else {
    add_into(kernel, square_kernel(Composition(even)));
  }
  return kernel;
}

LaurentPoly kernel_polynomial(const std::map<int, BigInt>& kernel) {
  LaurentPoly p;
  for (const auto& [a, c] : kernel) p.add_term(a, c);
  return p;
}

LaurentPoly trig_sum_square(const Composition& parts, const FluxRational& flux) {
  return laurent_reduce_mod_q(kernel_polynomial(square_kernel(parts)), flux.q());
}

LaurentPoly trig_sum_honeycomb_diluted(const Composition& parts, const FluxRational& flux) {
  return laurent_reduce_mod_q(kernel_polynomial(diluted_kernel(parts)), flux.q());
}

AreaDistribution area_counts_from_table(const CoefficientTable& table) {
  const int n = table.n;
  std::map<int, ExactRational> acc;
  for (const auto& [parts, c] : table.values) {
    if (parts.is_zero()) {
      acc[0] += c;
      continue;
    }
    for (const auto& [a, k] : square_kernel(parts)) acc[a] += c * ExactRational(k);
  }
  const int weight = table.lattice == LatticeKind::square ? 2 * n : n;
  AreaDistribution::Counts counts;
  for (auto& [a, value] : acc) {
    value *= weight;
    if (value.get_den() != 1) throw Error(Errc::invalid_argument, "non-integral count at A = " + std::to_string(a));
    counts[a] = value.get_num();
  }
  return AreaDistribution(2 * n, std::move(counts));
}

AreaDistribution area_counts_square(int steps) {
  require_closed_length(steps);
  return area_counts_from_table(coefficient_table_square(steps / 2));
}

AreaDistribution area_counts_honeycomb(int steps) {
  require_closed_length(steps);
  return area_counts_from_table(coefficient_table_honeycomb(steps / 2));
}

RationalLaurent cluster_coefficient_from_table(LatticeKind lattice, int n, int q) {
  if (n < 1 || q < 1) throw Error(Errc::invalid_argument, "b(n) needs n >= 1 and q >= 1");
  const CoefficientTable table =
      lattice == LatticeKind::square ? coefficient_table_square(n) : coefficient_table_honeycomb(n);
  RationalLaurent b;
  for (const auto& [parts, c] : table.values) {
    if (parts.is_zero()) {
      b += RationalLaurent(ExactRational(c * q));
      continue;
    }
    const int j = static_cast<int>(parts.size());
    LaurentPoly window_sum;
    for (int k = 1; k <= q - j; ++k) {
      LaurentPoly term(1L);
      for (int i = 0; i < j; ++i) term *= spectral_function(k + i).pow(static_cast<unsigned>(parts[i]));
      window_sum += term;
    }
    b += to_rational(window_sum).scaled(c);
  }
  return n % 2 == 1 ? b : -b;
}

std::vector<SumRuleCheck> sum_rules(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "sum rules need n >= 1");
  std::vector<SumRuleCheck> checks;
  const std::string at = " (n=" + std::to_string(n) + ")";
  auto record = [&](std::string name, const ExactRational& lhs, const ExactRational& rhs) {
    checks.push_back({std::move(name) + at, lhs == rhs, lhs.get_str() + " = " + rhs.get_str()});
  };

  const CoefficientTable square = coefficient_table_square(n);
  const CoefficientTable honeycomb = coefficient_table_honeycomb(n);

  ExactRational c_total(0);
  for (const auto& [parts, c] : square.values) c_total += c;
  record("sum of c over compositions = C(2n,n)/(2n)", c_total, ratio(binomial(2L * n, n), BigInt(2 * n)));

  record("honeycomb composition count = F(n+2)", ExactRational(static_cast<long>(honeycomb.values.size())),
         ExactRational(fibonacci(static_cast<unsigned>(n + 2))));

  for (int n_prime = 0; n_prime <= n; ++n_prime) {
    ExactRational s(0);
    for (const auto& [parts, c] : honeycomb.values) {
      if (parts.total() == n_prime) s += c;
    }
    const BigInt choose = binomial(n, n_prime);
    record("n * sum of c_n over n'=" + std::to_string(n_prime) + " = C(n,n')^2", s * n, ExactRational(choose * choose));
  }

  ExactRational single(0);
  ExactRational all(0);
  for (const auto& [parts, c] : honeycomb.values) {
    if (parts.size() <= 1) single += c;
    all += c;
  }
  record("n * sum_l c_n(l) = F(2n+1) + F(2n-1) - 1", single * n,
         ExactRational(fibonacci(2U * n + 1) + fibonacci(2U * n - 1) - 1));
  record("n * sum of all c_n = C(2n,n)", all * n, ExactRational(binomial(2L * n, n)));

  // Large-q limit of the trigonometric sums: each becomes C(2L, L).
  ExactRational square_limit(0);
  for (const auto& [parts, c] : square.values) square_limit += c * ExactRational(binomial(2L * parts.total(), parts.total()));
  const BigInt central = binomial(2L * n, n);
  record("2n * sum c C(2L,L) = C(2n,n)^2", square_limit * (2 * n), ExactRational(central * central));

  ExactRational honeycomb_limit(0);
  for (const auto& [parts, c] : honeycomb.values) {
    honeycomb_limit += c * ExactRational(binomial(2L * parts.total(), parts.total()));
  }
  record("n * sum c_n C(2L,L) = sum C(n,n')^2 C(2n',n')", honeycomb_limit * n,
         ExactRational(closed_walk_total(LatticeKind::honeycomb, 2 * n)));

  record("square formula total = C(2n,n)^2", ExactRational(area_counts_square(2 * n).total()),
         ExactRational(closed_walk_total(LatticeKind::square, 2 * n)));
  record("honeycomb formula total = sum C(n,n')^2 C(2n',n')", ExactRational(area_counts_honeycomb(2 * n).total()),
         ExactRational(closed_walk_total(LatticeKind::honeycomb, 2 * n)));

  bool stripped_ok = true;
  std::string first_mismatch = "all compositions agree";
  for (int n_prime = 1; n_prime <= n; ++n_prime) {
    for (const Composition& parts : compositions(n_prime)) {
      if (cn_coeff_without_binomial(parts) != c_coeff(parts) && stripped_ok) {
        stripped_ok = false;
        first_mismatch = "mismatch at " + parts.to_string();
      }
    }
  }
  checks.push_back({"c_n without its binomial = c" + at, stripped_ok, first_mismatch});
  return checks;
}

}  // namespace walks::combinatorics
