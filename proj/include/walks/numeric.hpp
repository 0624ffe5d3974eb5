#pragma once

#include "walks/laurent.hpp"

namespace walks {

/// C(n, k), and 0 whenever k < 0, n < 0 or k > n. The counting kernels sum
/// over unbounded index ranges and rely on out-of-range terms vanishing.
BigInt binomial(long n, long k);

/// F_0 = 0, F_1 = F_2 = 1.
BigInt fibonacci(unsigned n);

bool is_prime(int n);
/// Smallest prime strictly greater than n.
int next_prime_above(int n);

}  // namespace walks
