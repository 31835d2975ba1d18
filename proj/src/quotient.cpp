#include "grplat/quotient.hpp"

#include <algorithm>

namespace grplat {

namespace {

struct CosetAction {
  std::vector<int> projection;  // parent element -> quotient index, -1 outside
  std::shared_ptr<Group> quotient;
};

CosetAction act_on_cosets(const Group& parent, const ElementSet& source,
                          const ElementSet& kernel) {
  if (!kernel.subset_of(source)) throw Error("kernel is not inside the source subgroup");
  bool kernel_normal = true;
  source.for_each([&](int k) {
    if (!kernel_normal) return;
    kernel.for_each([&](int x) {
      if (kernel_normal && !kernel.test(parent.conj(x, k))) kernel_normal = false;
    });
  });
  if (!kernel_normal) throw Error("kernel is not normal in the source subgroup");

  int n = static_cast<int>(parent.order());
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;  // minimal representative per coset, ascending
  source.for_each([&](int k) {
    if (coset_of[k] >= 0) return;
    int id = static_cast<int>(reps.size());
    reps.push_back(k);
    kernel.for_each([&](int x) { coset_of[parent.mul(x, k)] = id; });
  });

  int q = static_cast<int>(reps.size());
  CosetAction out;
  std::vector<Permutation> elems;
  source.for_each([&](int g) {
    std::vector<int> im(q);
    for (int c = 0; c < q; ++c) im[c] = coset_of[parent.mul(reps[c], g)];
    elems.emplace_back(std::move(im));
  });
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  out.quotient = std::make_shared<Group>(Group::from_elements(std::move(elems)));

  out.projection.assign(n, -1);
  source.for_each([&](int g) {
    std::vector<int> im(q);
    for (int c = 0; c < q; ++c) im[c] = coset_of[parent.mul(reps[c], g)];
    out.projection[g] = out.quotient->index_of(Permutation(std::move(im)));
  });
  return out;
}

}  // namespace

QuotientGroup QuotientGroup::build(std::shared_ptr<const Group> parent,
                                   ElementSet source_members, ElementSet kernel) {
  CosetAction act = act_on_cosets(*parent, source_members, kernel);
  QuotientGroup out;
  out.parent_ = std::move(parent);
  out.quotient_ = std::move(act.quotient);
  out.source_members_ = std::move(source_members);
  out.kernel_ = std::move(kernel);
  out.projection_ = std::move(act.projection);
  return out;
}

ElementSet QuotientGroup::push(const ElementSet& h) const {
  ElementSet out(static_cast<int>(quotient_->order()));
  h.for_each([&](int x) {
    int q = projection_[x];
    if (q < 0) throw Error("pushed subgroup is not inside the source subgroup");
    out.set(q);
  });
  return out;
}

ElementSet QuotientGroup::pull(const ElementSet& q) const {
  ElementSet out(static_cast<int>(parent_->order()));
  source_members_.for_each([&](int x) {
    if (q.test(projection_[x])) out.set(x);
  });
  return out;
}

Group coset_action_quotient(const Group& parent, const ElementSet& source_members,
                            const ElementSet& kernel) {
  return std::move(*act_on_cosets(parent, source_members, kernel).quotient);
}

QuotientGroup quotient(const SubgroupLattice& lat, int n_idx) {
  if (!lat.is_normal_in(n_idx, lat.full()))
    throw Error("quotient kernel is not normal in the parent");
  return QuotientGroup::build(lat.group_ptr(), full_element_set(lat.group()),
                              lat.members(n_idx));
}

ElementSet full_element_set(const Group& g) {
  ElementSet s(static_cast<int>(g.order()));
  for (int i = 0; i < static_cast<int>(g.order()); ++i) s.set(i);
  return s;
}

}  // namespace grplat
