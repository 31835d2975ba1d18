#include "grplat/arith.hpp"

namespace grplat {

std::vector<std::uint64_t> prime_divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_square_free(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t k = 1;
  while (n % p == 0) {
    k *= p;
    n /= p;
  }
  return k;
}

bool is_prime_power(std::uint64_t n) {
  return n >= 1 && prime_divisors_of(n).size() <= 1;
}

}  // namespace grplat
