#include "grplat/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "grplat/arith.hpp"

namespace grplat {

Group Group::generate(std::vector<Permutation> generators, int degree,
                      std::size_t order_cap) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error("generator degree mismatch");

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier;
  Permutation id(degree);
  seen.insert(id);
  frontier.push_back(id);

  // BFS closure; right-multiplying by generators reaches every element
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        Permutation y = compose(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > order_cap) throw CapError("group order exceeds cap");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }

  Group out;
  out.degree_ = degree;
  out.elements_.assign(seen.begin(), seen.end());
  std::sort(out.elements_.begin(), out.elements_.end());
  out.generators_ = std::move(generators);
  out.finalize();
  return out;
}

Group Group::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) throw Error("element list must be nonempty");
  int degree = elements.front().degree();
  for (const auto& e : elements)
    if (e.degree() != degree) throw Error("element degree mismatch");

  Group out;
  out.degree_ = degree;
  out.elements_ = std::move(elements);
  std::sort(out.elements_.begin(), out.elements_.end());
  out.elements_.erase(std::unique(out.elements_.begin(), out.elements_.end()),
                      out.elements_.end());

  // greedy generator extraction: grow a subgroup until it is everything
  std::unordered_set<Permutation, PermutationHash> span;
  span.insert(Permutation(degree));
  for (const auto& e : out.elements_) {
    if (span.count(e)) continue;
    out.generators_.push_back(e);
    std::vector<Permutation> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier) {
        for (const auto& g : out.generators_) {
          Permutation y = compose(x, g);
          if (span.insert(y).second) {
            if (span.size() > out.elements_.size())
              throw Error("element list is not closed under composition");
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    if (span.size() == out.elements_.size()) break;
  }
  for (const auto& e : out.elements_)
    if (!span.count(e)) throw Error("element list is not closed under composition");

  out.finalize();
  return out;
}

void Group::finalize() {
  std::size_t n = elements_.size();
  identity_ = 0;
  if (!elements_[0].is_identity()) throw Error("identity missing from element list");

  gen_indices_.clear();
  for (const auto& g : generators_) {
    int idx = index_of(g);
    if (idx < 0) throw Error("generator missing from element list");
    gen_indices_.push_back(idx);
  }

  inverse_.resize(n);
  element_orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    int inv_idx = index_of(inverse(elements_[i]));
    if (inv_idx < 0) throw Error("element list is not closed under inversion");
    inverse_[i] = inv_idx;
    element_orders_[i] = element_order(elements_[i]);
  }

  if (n <= kMulTableMax) {
    mul_table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        int idx = index_of(compose(elements_[a], elements_[b]));
        if (idx < 0) throw Error("element list is not closed under composition");
        mul_table_[a * n + b] = idx;
      }
  }
}

int Group::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int Group::mul_slow(int a, int b) const {
  int idx = index_of(compose(elements_[a], elements_[b]));
  if (idx < 0) throw Error("element list is not closed under composition");
  return idx;
}

bool Group::is_abelian() const {
  for (int a : gen_indices_)
    for (int b : gen_indices_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (std::uint64_t o : g.element_orders()) e = std::lcm(e, o);
  return e;
}

std::vector<std::uint64_t> prime_divisors(const Group& g) {
  return prime_divisors_of(g.order());
}

}  // namespace grplat
