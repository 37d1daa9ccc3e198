#include "gphi/number_theory.hpp"

#include <string>

#include "gphi/errors.hpp"

namespace gphi {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

unsigned p_valuation(std::uint64_t n, std::uint64_t p) {
  unsigned e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  auto f = factorize(n);
  return f.size() == 1 ? f.front().first : 0;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

unsigned multiplicative_order(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(q)) {
    throw GroupError(ErrorKind::InvalidParameter, "modulus " + std::to_string(q) + " is not prime");
  }
  if (p % q == 0) {
    throw GroupError(ErrorKind::InvalidParameter,
                     std::to_string(q) + " divides " + std::to_string(p) + "; no multiplicative order");
  }
  const std::uint64_t base = p % q;
  std::uint64_t acc = base;
  unsigned r = 1;
  while (acc != 1) {
    acc = acc * base % q;
    ++r;
  }
  return r;
}

}  // namespace gphi
