#pragma once

#include <cstdint>
#include <vector>

namespace grplat {

// Distinct prime divisors of n, ascending.  n = 0 or 1 gives {}.
std::vector<std::uint64_t> prime_divisors_of(std::uint64_t n);

bool is_prime(std::uint64_t n);

// true when no square of a prime divides n
bool is_square_free(std::uint64_t n);

// largest power of p dividing n
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// true when n is 1 or a power of a single prime
bool is_prime_power(std::uint64_t n);

}  // namespace grplat
