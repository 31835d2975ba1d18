#pragma once

#include <memory>

#include "grplat/element_set.hpp"
#include "grplat/group.hpp"
#include "grplat/lattice.hpp"

namespace grplat {

// The quotient group of `source` (a subgroup K of a parent group, possibly
// all of it) by a kernel N normal in K, realized as the faithful action on
// the right cosets of N in K.  Cosets are ordered by minimal representative,
// so the construction is deterministic.  |quotient| * |kernel| = |source|.
class QuotientGroup {
 public:
  // Throws unless kernel <= source_members and kernel is normal in it.
  static QuotientGroup build(std::shared_ptr<const Group> parent,
                             ElementSet source_members, ElementSet kernel);

  const Group& parent() const { return *parent_; }
  const Group& quotient() const { return *quotient_; }
  std::shared_ptr<const Group> quotient_ptr() const { return quotient_; }
  const ElementSet& kernel() const { return kernel_; }
  const ElementSet& source_members() const { return source_members_; }

  // quotient element index of a source element; -1 outside the source
  int project(int parent_elem) const { return projection_[parent_elem]; }

  // image of a subgroup of the source (equals the image of H*kernel)
  ElementSet push(const ElementSet& h) const;
  // full preimage of a subgroup of the quotient; always contains the kernel
  ElementSet pull(const ElementSet& q) const;

 private:
  QuotientGroup() = default;

  std::shared_ptr<const Group> parent_;
  std::shared_ptr<const Group> quotient_;
  ElementSet source_members_;
  ElementSet kernel_;
  std::vector<int> projection_;
};

// Quotient group alone, without the projection bookkeeping (membership
// tests on K/N during residual computation and supersolvability recursion).
Group coset_action_quotient(const Group& parent, const ElementSet& source_members,
                            const ElementSet& kernel);

// G/N for a lattice member N; throws unless N is normal in the parent.
QuotientGroup quotient(const SubgroupLattice& lat, int n_idx);

ElementSet full_element_set(const Group& g);

}  // namespace grplat
