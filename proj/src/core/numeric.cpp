#include "walks/numeric.hpp"

namespace walks {

BigInt binomial(long n, long k) {
  BigInt r;
  if (n < 0 || k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt fibonacci(unsigned n) {
  BigInt r;
  mpz_fib_ui(r.get_mpz_t(), n);
  return r;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int next_prime_above(int n) {
  int c = n < 2 ? 2 : n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace walks
