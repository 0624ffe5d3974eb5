#include "walks/laurent.hpp"

namespace walks {

RationalLaurent to_rational(const LaurentPoly& p) {
  RationalLaurent r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, ExactRational(c));
  return r;
}

LaurentPoly spectral_function(int k) {
  LaurentPoly s(BigInt(2));
  s.add_term(k, BigInt(-1));
  s.add_term(-k, BigInt(-1));
  return s;
}

namespace {

// Exact division of monic integer polynomials, constant term first.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<BigInt> quot(num.size() - dn, BigInt(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const BigInt c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int q) {
  if (q < 1) throw Error(Errc::invalid_argument, "cyclotomic index must be >= 1");
  std::vector<BigInt> poly(static_cast<std::size_t>(q) + 1, BigInt(0));
  poly.front() = -1;
  poly.back() = 1;
  for (int d = 1; d < q; ++d) {
    if (q % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

}  // namespace walks
