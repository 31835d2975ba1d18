#pragma once

#include <cstdint>
#include <vector>

namespace grplat {

// Bitset over a fixed universe of dense ids (group element indices,
// subgroup indices).  Sets from different universes never mix.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe);
  static ElementSet from_indices(int universe, const std::vector<int>& idxs);

  int universe() const { return universe_; }
  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
  void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63)); }

  int count() const;
  bool subset_of(const ElementSet& o) const;
  std::vector<int> members() const;
  int first() const;  // smallest member, -1 when empty

  template <class F>
  void for_each(F&& f) const {  // ascending order
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
  }

  ElementSet operator&(const ElementSet& o) const;
  ElementSet operator|(const ElementSet& o) const;
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // lexicographic on ascending member sequences; used to canonicalize
  // subgroups of equal order
  bool canon_less(const ElementSet& o) const;

  std::size_t hash() const;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace grplat
