#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gphi {

bool is_prime(std::uint64_t n);

/// Prime factorization as ascending (prime, exponent) pairs. Empty for n = 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Exponent of p in n (n > 0, p prime).
unsigned p_valuation(std::uint64_t n, std::uint64_t p);

/// If n = p^k with k >= 1, returns p; otherwise 0. Returns 0 for n = 1.
std::uint64_t prime_power_base(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Least r >= 1 with p^r = 1 (mod q). Throws InvalidParameter when q is not
/// prime or q divides p.
unsigned multiplicative_order(std::uint64_t p, std::uint64_t q);

}  // namespace gphi
