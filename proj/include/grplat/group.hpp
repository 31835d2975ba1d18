#pragma once

#include <cstdint>
#include <vector>

#include "grplat/permutation.hpp"

namespace grplat {

inline constexpr std::size_t kDefaultOrderCap = 5000;

// Above this order the full multiplication table is skipped and products
// fall back to composing permutations plus binary search.
inline constexpr std::size_t kMulTableMax = 2048;

// A finite permutation group, fully materialized.  Elements are stored
// sorted lexicographically by image sequence, which places the identity at
// index 0.  Immutable after construction and safe to share across threads.
class Group {
 public:
  // Closure of `generators` (plus the identity) under composition.  Throws
  // CapError when the closure grows past `order_cap`.
  static Group generate(std::vector<Permutation> generators, int degree,
                        std::size_t order_cap = kDefaultOrderCap);

  // Wraps an element set already closed under composition (quotient
  // construction).  Extracts a small generating set; closure is re-verified
  // whenever the multiplication table is built.
  static Group from_elements(std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& generator_indices() const { return gen_indices_; }

  int index_of(const Permutation& p) const;  // -1 when absent

  // index arithmetic; a, b are element indices
  int mul(int a, int b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return mul_slow(a, b);
  }
  int inv(int a) const { return inverse_[a]; }
  int conj(int a, int g) const { return mul(mul(inverse_[g], a), g); }  // g^{-1} a g
  int identity_index() const { return identity_; }

  std::uint64_t order_of(int a) const { return element_orders_[a]; }
  const std::vector<std::uint64_t>& element_orders() const { return element_orders_; }
  bool is_abelian() const;

 private:
  Group() = default;
  void finalize();  // sorts nothing; builds index structures from elements_
  int mul_slow(int a, int b) const;

  int degree_ = 1;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::vector<int> gen_indices_;
  std::vector<int> inverse_;
  std::vector<std::uint64_t> element_orders_;
  std::vector<std::int32_t> mul_table_;  // empty when order > kMulTableMax
  int identity_ = 0;
};

// lcm of element orders
std::uint64_t exponent(const Group& g);

// primes dividing |G|, ascending
std::vector<std::uint64_t> prime_divisors(const Group& g);

}  // namespace grplat
