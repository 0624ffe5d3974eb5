#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "walks/error.hpp"
#include "walks/flux.hpp"

namespace walks {

using BigInt = mpz_class;
using ExactRational = mpq_class;

/// Laurent polynomial in one formal variable Q with exact coefficients.
///
/// Terms are kept in a sorted exponent -> coefficient map and zero
/// coefficients are never stored, so two polynomials are equal iff their
/// term maps are equal. Values are immutable once built except through the
/// compound-assignment operators.
template <typename Coeff>
class BasicLaurent {
 public:
  using Terms = std::map<int, Coeff>;

  BasicLaurent() = default;
  BasicLaurent(const Coeff& constant) { add_term(0, constant); }  // NOLINT: implicit by design of ring literals
  BasicLaurent(long constant) { add_term(0, Coeff(constant)); }    // NOLINT

  static BasicLaurent monomial(int exponent, const Coeff& c = Coeff(1)) {
    BasicLaurent r;
    r.add_term(exponent, c);
    return r;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Coeff coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  // pre: !is_zero()
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  void add_term(int exponent, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicLaurent& operator+=(const BasicLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicLaurent& operator-=(const BasicLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
    return *this;
  }
  BasicLaurent& operator*=(const BasicLaurent& o) { return *this = *this * o; }

  friend BasicLaurent operator+(BasicLaurent a, const BasicLaurent& b) { return a += b; }
  friend BasicLaurent operator-(BasicLaurent a, const BasicLaurent& b) { return a -= b; }
  friend BasicLaurent operator-(const BasicLaurent& a) {
    BasicLaurent r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, Coeff(-c));
    return r;
  }
  friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
    BasicLaurent r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Coeff prod = ca * cb;
        r.add_term(ea + eb, prod);
      }
    }
    return r;
  }

  friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != ib->first || c != ib->second) return false;
      ++ib;
    }
    return true;
  }

  BasicLaurent scaled(const Coeff& factor) const {
    BasicLaurent r;
    if (factor == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Coeff(c * factor));
    return r;
  }

  BasicLaurent pow(unsigned n) const {
    BasicLaurent result(Coeff(1));
    BasicLaurent base = *this;
    while (n != 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return result;
  }

  std::complex<double> evaluate(std::complex<double> q) const {
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(q, e);
    return sum;
  }

  std::complex<double> evaluate(const FluxRational& flux) const {
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_) sum += c.get_d() * flux.phase_power(e);
    return sum;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      Coeff mag = abs(c);
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag << "*";
      os << "Q^" << e;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using LaurentPoly = BasicLaurent<BigInt>;
using RationalLaurent = BasicLaurent<ExactRational>;

RationalLaurent to_rational(const LaurentPoly& p);

/// s_k = (1 - Q^k)(1 - Q^-k) = 2 - Q^k - Q^-k.
LaurentPoly spectral_function(int k);

/// Folds exponents into [0, q), i.e. evaluates in Z[Q]/(Q^q - 1).
template <typename Coeff>
BasicLaurent<Coeff> laurent_reduce_mod_q(const BasicLaurent<Coeff>& poly, int q) {
  if (q < 1) throw Error(Errc::invalid_argument, "reduction modulus must be >= 1");
  BasicLaurent<Coeff> r;
  for (const auto& [e, c] : poly.terms()) {
    int m = e % q;
    if (m < 0) m += q;
    r.add_term(m, c);
  }
  return r;
}

/// Integer coefficients of the q-th cyclotomic polynomial, constant term first.
std::vector<BigInt> cyclotomic_polynomial(int q);

/// Canonical form at a primitive q-th root of unity: fold mod Q^q = 1, then
/// take the remainder modulo the cyclotomic polynomial. Two polynomials agree
/// at every exp(2 pi i p/q) with gcd(p, q) = 1 iff their forms are equal.
template <typename Coeff>
BasicLaurent<Coeff> reduce_at_primitive_root(const BasicLaurent<Coeff>& poly, int q) {
  const BasicLaurent<Coeff> folded = laurent_reduce_mod_q(poly, q);
  std::vector<Coeff> dense(static_cast<std::size_t>(q), Coeff(0));
  for (const auto& [e, c] : folded.terms()) dense[static_cast<std::size_t>(e)] = c;

  const std::vector<BigInt> phi = cyclotomic_polynomial(q);
  const int degree = static_cast<int>(phi.size()) - 1;
  for (int e = q - 1; e >= degree; --e) {
    const Coeff lead = dense[static_cast<std::size_t>(e)];
    if (lead == 0) continue;
    for (int i = 0; i <= degree; ++i) {
      Coeff delta = lead * Coeff(phi[static_cast<std::size_t>(i)]);
      dense[static_cast<std::size_t>(e - degree + i)] -= delta;
    }
  }
  BasicLaurent<Coeff> r;
  for (int e = 0; e < degree; ++e) r.add_term(e, dense[static_cast<std::size_t>(e)]);
  return r;
}

}  // namespace walks
