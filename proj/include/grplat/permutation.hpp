#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grplat {

// Malformed input or a violated operation precondition.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group generation exceeded the configured order cap.
struct CapError : Error {
  using Error::Error;
};

// Subgroup enumeration exceeded the configured subgroup limit.
struct LimitError : Error {
  using Error::Error;
};

// A bijection on {0..degree-1}; images()[i] is the image of point i.
class Permutation {
 public:
  // identity on `degree` points
  explicit Permutation(int degree);
  // takes ownership of an image sequence, validates it is a bijection
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  // lexicographic on image sequences; the canonical element order everywhere
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

// compose(p, q) applies p first, then q: compose(p, q)(x) = q(p(x)).
// All modules use this orientation; tests pin it.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// g^{-1} a g under the compose() orientation
Permutation conjugate(const Permutation& a, const Permutation& g);

// Parses disjoint-cycle notation over 1-based points, e.g. "(1 2 3)(4 5)".
// "" and "()" denote the identity; unmentioned points are fixed.  Points may
// be separated by whitespace or commas.  Throws Error on points out of
// [1, degree], repeated points, or malformed parentheses.
Permutation parse_permutation(std::string_view cycle_text, int degree);

// 1-based disjoint-cycle form; the identity prints as "()"
std::string to_cycle_string(const Permutation& p);

// least k >= 1 with p^k = identity (lcm of cycle lengths)
std::uint64_t element_order(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace grplat
