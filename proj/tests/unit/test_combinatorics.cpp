#include <doctest.h>

#include <functional>
#include <numeric>

#include "support/oracles.hpp"
#include "walks/combinatorics.hpp"
#include "walks/numeric.hpp"
#include "walks/oracle.hpp"
#include "walks/partition.hpp"
#include "walks/spectral.hpp"

using namespace walks;
using namespace walks::combinatorics;

namespace {

Composition comp(std::initializer_list<int> parts) { return Composition(std::vector<int>(parts)); }

ExactRational rat(long num, long den = 1) {
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

Errc error_code(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::invalid_argument;
}

/// Odd positions are the unit levels, even positions carry s_k.
std::vector<int> diluted_symbols(int q) {
  std::vector<int> symbols;
  for (int k = 1; k <= q; ++k) {
    symbols.push_back(0);
    symbols.push_back(k);
  }
  return symbols;
}

void check_against_table(const AreaDistribution& d, const std::map<int, long>& column) {
  const AreaDistribution::Counts combined = d.combined();
  CHECK(combined.size() == column.size());
  for (const auto& [a, c] : column) {
    CAPTURE(a);
    CHECK(combined.at(a) == c);
  }
}

}  // namespace

TEST_CASE("compositions") {
  const std::vector<Composition> three = compositions(3);
  CHECK(three == std::vector<Composition>{comp({3}), comp({1, 2}), comp({2, 1}), comp({1, 1, 1})});
  CHECK(compositions(0) == std::vector<Composition>{Composition::zero()});
  CHECK(compositions(4, 2).size() == 4);
  for (int n = 1; n <= 12; ++n) CHECK(compositions(n).size() == (std::size_t{1} << (n - 1)));

  CHECK(honeycomb_compositions(5).size() == 13);
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto list = honeycomb_compositions(n);
    CHECK(BigInt(static_cast<long>(list.size())) == fibonacci(static_cast<unsigned>(n + 2)));
    CHECK(coefficient_table_honeycomb(n).values.size() == list.size());
    for (const Composition& c : list) {
      if (c.is_zero()) continue;
      CHECK(static_cast<int>(c.size()) <= std::min(c.total(), n - c.total() + 1));
    }
  }
}

TEST_CASE("square coefficients c") {
  CHECK(c_coeff(comp({1, 1})) == 1);
  CHECK(c_coeff(comp({2})) == rat(1, 2));
  CHECK(c_coeff(comp({2, 2})) == rat(3, 2));
  CHECK(c_coeff(comp({1, 2, 1})) == 2);
  CHECK(c_coeff(comp({5})) == rat(1, 5));
  CHECK(error_code([] { c_coeff(Composition::zero()); }) == Errc::zero_composition);
}

TEST_CASE("c matches the logarithm of the exclusion series") {
  // A chain of s_1..s_7, no two adjacent levels occupied; b(n) carries each
  // window monomial with coefficient (-1)^(n+1) c.
  const int symbols = 7;
  const int nmax = 5;
  std::vector<int> chain;
  for (int k = 1; k <= symbols; ++k) chain.push_back(k);
  const auto log = test::symbolic_cluster_series(chain, symbols, nmax);
  for (int n = 1; n <= nmax; ++n) {
    const ExactRational sign(n % 2 == 1 ? 1 : -1);
    for (const Composition& parts : compositions(n)) {
      CAPTURE(parts.to_string());
      for (int k = 1; k + static_cast<int>(parts.size()) - 1 <= symbols; ++k) {
        CHECK(log[n].coefficient(test::window_key(symbols, k, parts)) == sign * c_coeff(parts));
      }
    }
  }
}

TEST_CASE("honeycomb coefficients c_n") {
  CHECK(cn_coeff(3, comp({2})) == 2);
  CHECK(cn_coeff(3, Composition::zero()) == rat(1, 3));
  CHECK(cn_coeff(3, comp({1, 1})) == 1);
  CHECK(cn_coeff(5, comp({1, 1})) == 10);
  // l1 multiplies the lowest index: c5(1,2) is the s_{k+1}^2 s_k coefficient
  CHECK(cn_coeff(5, comp({1, 2})) == 6);
  CHECK(cn_coeff(5, comp({2, 1})) == 6);
  CHECK(cn_coeff(1, comp({1})) == 1);
  for (int l = 1; l <= 6; ++l) {
    for (int n = l; n <= 10; ++n) CHECK(cn_coeff(n, comp({l})) == ExactRational(binomial(n + l - 1, 2 * l - 1)) / l);
  }
  CHECK(error_code([] { cn_coeff(3, comp({1, 1, 1})); }) == Errc::constraint_violated);
  CHECK(error_code([] { cn_coeff(2, comp({3})); }) == Errc::constraint_violated);
}

TEST_CASE("c_n matches the logarithm of the diluted exclusion series") {
  const int q = 8;
  const int k = 4;  // window far enough from both chain ends
  const int nmax = 5;
  const auto log = test::symbolic_cluster_series(diluted_symbols(q), q, nmax);
  for (int n = 1; n <= nmax; ++n) {
    CAPTURE(n);
    const ExactRational sign(n % 2 == 1 ? 1 : -1);
    CHECK(log[n].coefficient(test::SymbolPoly::Key(static_cast<std::size_t>(q), 0)) == sign * ExactRational(q) / n);
    for (int total = 1; total <= n; ++total) {
      for (const Composition& parts : compositions(total)) {
        if (k + static_cast<int>(parts.size()) - 1 > q) continue;
        CAPTURE(parts.to_string());
        const bool allowed = static_cast<int>(parts.size()) <= std::min(total, n - total + 1);
        const ExactRational expected = allowed ? ExactRational(sign * cn_coeff(n, parts)) : ExactRational(0);
        CHECK(log[n].coefficient(test::window_key(q, k, parts)) == expected);
      }
    }
  }
}

TEST_CASE("dropping the binomial recovers c") {
  for (int n = 1; n <= 6; ++n) {
    for (const Composition& parts : compositions(n)) CHECK(cn_coeff_without_binomial(parts) == c_coeff(parts));
  }
}

TEST_CASE("kernels") {
  CHECK(square_kernel(comp({1})) == std::map<int, BigInt>{{0, 2}});
  for (int n = 1; n <= 7; ++n) {
    for (const Composition& parts : compositions(n)) {
      CAPTURE(parts.to_string());
      const auto kernel = square_kernel(parts);
      BigInt total = 0;
      for (const auto& [a, v] : kernel) {
        total += v;
        CHECK(v != 0);
        // each unit of weight can shift the area by at most j - 1
        CHECK(std::abs(a) <= n * (static_cast<int>(parts.size()) - 1));
        auto mirror = kernel.find(-a);
        REQUIRE(mirror != kernel.end());
        CHECK(mirror->second == v);
      }
      CHECK(total == binomial(2 * n, n));
    }
  }
  // one group empty: the constant 1 plus the other group's kernel
  CHECK(diluted_kernel(comp({1})) == std::map<int, BigInt>{{0, 3}});
  const auto split = diluted_kernel(comp({1, 1, 2}));
  const auto odd = square_kernel(comp({1, 2}));
  const auto even = square_kernel(comp({1}));
  LaurentPoly expected = kernel_polynomial(odd) + kernel_polynomial(even);
  CHECK(kernel_polynomial(split) == expected);
}

TEST_CASE("square trigonometric sums equal direct summation") {
  for (int q : {5, 7, 8, 11}) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const FluxRational f(p, q);
      CHECK(trig_sum_square(comp({1}), f).evaluate(f).real() == doctest::Approx(2.0).epsilon(1e-12));
    }
    for (int n = 1; n < q && n <= 6; ++n) {
      for (const Composition& parts : compositions(n)) {
        CAPTURE(q);
        CAPTURE(parts.to_string());
        const LaurentPoly direct = test::direct_square_sum(parts, q);
        const LaurentPoly closed = trig_sum_square(parts, FluxRational(1, q));
        CHECK(reduce_at_primitive_root(direct, q) == reduce_at_primitive_root(closed * LaurentPoly(static_cast<long>(q)), q));
      }
    }
  }
}

TEST_CASE("diluted trigonometric sums equal direct summation") {
  const FluxRational five(1, 5);
  CHECK(trig_sum_honeycomb_diluted(comp({1}), five).evaluate(five).real() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(reduce_at_primitive_root(test::direct_diluted_sum(comp({1}), 5), 5) == LaurentPoly(15L));

  for (int q : {5, 7, 11}) {
    for (int n = 1; n < q && n <= 6; ++n) {
      for (const Composition& parts : compositions(n)) {
        CAPTURE(q);
        CAPTURE(parts.to_string());
        const LaurentPoly direct = test::direct_diluted_sum(parts, q);
        const LaurentPoly closed = trig_sum_honeycomb_diluted(parts, FluxRational(2, q));
        CHECK(reduce_at_primitive_root(direct, q) == reduce_at_primitive_root(closed * LaurentPoly(static_cast<long>(q)), q));
        for (int p = 1; p < q; ++p) {
          const FluxRational f(p, q);
          CHECK(closed.evaluate(f).real() * q == doctest::Approx(direct.evaluate(f).real()).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("square area counts") {
  CHECK(area_counts_square(2) == AreaDistribution(2, {{0, BigInt(4)}}));
  CHECK(area_counts_square(4) == AreaDistribution(4, {{-1, BigInt(4)}, {0, BigInt(28)}, {1, BigInt(4)}}));
  for (const auto& [steps, column] : test::square_table()) {
    CAPTURE(steps);
    const AreaDistribution d = area_counts_square(steps);
    check_against_table(d, column);
    CHECK(d.total() == test::square_table_totals().at(steps));
  }
  for (int n = 1; n <= 10; ++n) {
    const AreaDistribution d = area_counts_square(2 * n);
    CHECK(d.total() == binomial(2 * n, n) * binomial(2 * n, n));
    CHECK(d.is_symmetric());
    CHECK(d.max_abs_area() == area_bound(LatticeKind::square, 2 * n));
  }
  CHECK(error_code([] { area_counts_square(5); }) == Errc::odd_length);
}

TEST_CASE("honeycomb area counts") {
  CHECK(area_counts_honeycomb(6) == AreaDistribution(6, {{-1, BigInt(3)}, {0, BigInt(87)}, {1, BigInt(3)}}));
  CHECK(area_counts_honeycomb(12).total() == 35169);
  for (const auto& [steps, column] : test::honeycomb_table()) {
    CAPTURE(steps);
    const AreaDistribution d = area_counts_honeycomb(steps);
    check_against_table(d, column);
    CHECK(d.total() == test::honeycomb_table_totals().at(steps));
  }
  for (int n = 1; n <= 10; ++n) {
    BigInt expected = 0;
    for (int m = 0; m <= n; ++m) expected += binomial(n, m) * binomial(n, m) * binomial(2 * m, m);
    const AreaDistribution d = area_counts_honeycomb(2 * n);
    CHECK(d.total() == expected);
    CHECK(d.is_symmetric());
    CHECK(d.max_abs_area() == area_bound(LatticeKind::honeycomb, 2 * n));
  }
  CHECK(error_code([] { area_counts_honeycomb(7); }) == Errc::odd_length);
}

TEST_CASE("formula route = enumeration = spectral reconstruction") {
  for (int steps = 2; steps <= 14; steps += 2) {
    CAPTURE(steps);
    const AreaDistribution hex = area_counts_honeycomb(steps);
    CHECK(hex == oracle::enumerate_closed_walks(LatticeKind::honeycomb, steps));
    CHECK(hex == spectral::reconstruct_area_distribution(LatticeKind::honeycomb, steps));
    const AreaDistribution sq = area_counts_square(steps);
    if (steps <= 10) CHECK(sq == oracle::enumerate_closed_walks(LatticeKind::square, steps));
    CHECK(sq == spectral::reconstruct_area_distribution(LatticeKind::square, steps));
  }
}

TEST_CASE("a perturbed table changes the counts") {
  CoefficientTable table = coefficient_table_square(4);
  CHECK(area_counts_from_table(table) == area_counts_square(8));
  table.values.at(comp({2, 2})) += ExactRational(1, 8);
  CHECK_FALSE(area_counts_from_table(table) == area_counts_square(8));

  CoefficientTable hex = coefficient_table_honeycomb(5);
  CHECK(area_counts_from_table(hex) == area_counts_honeycomb(10));
}

TEST_CASE("cluster coefficients from the tables") {
  SUBCASE("square") {
    for (int q : {5, 7, 9}) {
      const auto b = partition::cluster_coefficients(partition::zn_square_recursive(q), q - 1);
      for (int n = 1; n < q; ++n) {
        CAPTURE(q);
        CAPTURE(n);
        CHECK(cluster_coefficient_from_table(LatticeKind::square, n, q) == b[static_cast<std::size_t>(n)]);
      }
    }
  }
  SUBCASE("honeycomb, with the top level removed") {
    for (int q : {5, 7, 9}) {
      const auto series =
          partition::zn_honeycomb_recursive(partition::SpectralSequence::undiluted(q).without_top_level());
      const auto b = partition::cluster_coefficients(series, q - 1);
      for (int n = 1; n < q; ++n) {
        CAPTURE(q);
        CAPTURE(n);
        const RationalLaurent table = cluster_coefficient_from_table(LatticeKind::honeycomb, n, q);
        CHECK(table == b[static_cast<std::size_t>(n)]);
        for (int p = 1; p < q; ++p) {
          if (std::gcd(p, q) != 1) continue;
          const FluxRational f(p, q);
          CHECK(table.evaluate(f).real() ==
                doctest::Approx(b[static_cast<std::size_t>(n)].evaluate(f).real()).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("sum rules") {
  for (int n = 1; n <= 10; ++n) {
    for (const SumRuleCheck& rule : sum_rules(n)) {
      CAPTURE(n);
      CAPTURE(rule.name);
      CAPTURE(rule.detail);
      CHECK(rule.passed);
    }
  }
  ExactRational square_sum = 0;
  for (const Composition& parts : compositions(3)) square_sum += c_coeff(parts);
  CHECK(square_sum == rat(10, 3));
  CHECK(3 * (cn_coeff(3, comp({2})) + cn_coeff(3, comp({1, 1}))) == 9);
  CHECK(cn_coeff(1, Composition::zero()) + cn_coeff(1, comp({1})) == fibonacci(3) + fibonacci(1) - 1);
}
