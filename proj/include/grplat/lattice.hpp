#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "grplat/element_set.hpp"
#include "grplat/group.hpp"

namespace grplat {

inline constexpr std::size_t kDefaultSubgroupLimit = 20000;

// Closure of a seed set of element indices under products.  The seed must
// contain the identity; the result is the subgroup the seed generates.
ElementSet close_under_mul(const Group& g, ElementSet seed);

// Handle into a SubgroupLattice.  Refs are only meaningful together with
// the lattice that produced them; equal refs mean equal element sets.
struct SubgroupRef {
  int index = -1;
  std::size_t order = 0;
  friend bool operator==(const SubgroupRef&, const SubgroupRef&) = default;
};

// The complete subgroup lattice of a group: every subgroup literally (not up
// to conjugacy), with precomputed containment, join/meet and normality
// tables.  Subgroups are canonically ordered by (order, element set), so
// index 0 is the trivial subgroup and the last index is the whole group.
// Construction is single-threaded; the finished lattice is immutable.
class SubgroupLattice {
 public:
  // Enumerates by seeding with all cyclic subgroups and closing under
  // pairwise join until a fixpoint (every subgroup is a join of cyclic
  // subgroups).  Throws LimitError past `subgroup_limit`.
  static SubgroupLattice build(std::shared_ptr<const Group> g,
                               std::size_t subgroup_limit = kDefaultSubgroupLimit);

  const Group& group() const { return *group_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }

  int size() const { return static_cast<int>(member_sets_.size()); }
  SubgroupRef ref(int idx) const { return {idx, order_of(idx)}; }
  const ElementSet& members(int idx) const { return member_sets_[idx]; }
  std::size_t order_of(int idx) const { return orders_[idx]; }
  const std::vector<int>& generators_of(int idx) const { return gens_[idx]; }
  std::vector<std::string> generator_strings(int idx) const;
  int full() const { return size() - 1; }
  int trivial() const { return 0; }

  bool contains(int sub, int super) const {  // members(sub) subset of members(super)
    return (sub_rows_[super][static_cast<std::size_t>(sub) >> 6] >> (sub & 63)) & 1u;
  }
  int join(int a, int b) const { return join_tab_[static_cast<std::size_t>(a) * size() + b]; }
  int meet(int a, int b) const { return meet_tab_[static_cast<std::size_t>(a) * size() + b]; }

  // h normal in k; throws unless contains(h, k)
  bool is_normal_in(int h, int k) const;
  bool normal_in_parent(int idx) const { return is_normal_in(idx, full()); }

  int find(const ElementSet& s) const;  // -1 when absent
  int find_or_throw(const ElementSet& s) const;

  int conjugate_subgroup(int idx, int g) const;  // g a parent element index

  // largest subgroup of x normal in y; throws unless contains(x, y)
  int core(int x, int y) const;

  // smallest subgroup of k containing h and normal in k
  int normal_closure(int h, int k) const;

  std::vector<int> maximal_subgroups(int amb) const;
  bool is_maximal_in(int m, int amb) const;

  // a Sylow p-subgroup of the parent (canonical representative); the
  // trivial subgroup when p does not divide |G|
  int sylow_subgroup(std::uint64_t p) const;

  int center() const;
  int centralizer(int x) const;

  std::vector<int> subgroups_below(int amb) const;       // ascending
  std::vector<int> normal_subgroups_of(int amb) const;   // normal in amb

  // closure of parent element indices, located in the lattice
  int subgroup_generated_by(const std::vector<int>& elem_idxs) const;

  // covering pairs (sub, super) of the Hasse diagram
  std::vector<std::pair<int, int>> cover_edges() const;

 private:
  SubgroupLattice() = default;

  std::shared_ptr<const Group> group_;
  std::vector<ElementSet> member_sets_;
  std::vector<std::size_t> orders_;
  std::vector<std::vector<int>> gens_;  // small generating sets, element indices
  std::vector<std::vector<std::uint64_t>> sub_rows_;     // per super: bitrow of subs
  std::vector<std::vector<std::uint64_t>> sup_rows_;     // per sub: bitrow of supers
  std::vector<std::vector<std::uint64_t>> normal_rows_;  // per h: bitrow of k with h normal in k
  std::vector<std::uint32_t> join_tab_, meet_tab_;
  std::unordered_map<ElementSet, int, ElementSetHash> index_;
};

}  // namespace grplat
