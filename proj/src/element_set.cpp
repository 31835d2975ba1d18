#include "grplat/element_set.hpp"

#include <bit>

namespace grplat {

ElementSet::ElementSet(int universe)
    : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

ElementSet ElementSet::from_indices(int universe, const std::vector<int>& idxs) {
  ElementSet s(universe);
  for (int i : idxs) s.set(i);
  return s;
}

int ElementSet::count() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool ElementSet::subset_of(const ElementSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each([&](int i) { out.push_back(i); });
  return out;
}

int ElementSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * 64) + __builtin_ctzll(words_[w]);
  return -1;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & o.words_[i];
  return out;
}

ElementSet ElementSet::operator|(const ElementSet& o) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | o.words_[i];
  return out;
}

bool ElementSet::canon_less(const ElementSet& o) const {
  // Smaller member sequence first; with ids ascending per word this is a
  // word-by-word comparison of bit-reversed content done the simple way.
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t a = words_[w], b = o.words_[w];
    while (a || b) {
      if (!a) return false;  // o has an extra smaller member
      if (!b) return true;
      int ia = __builtin_ctzll(a), ib = __builtin_ctzll(b);
      if (ia != ib) return ia < ib;
      a &= a - 1;
      b &= b - 1;
    }
  }
  return false;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint64_t w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace grplat
