#include "grplat/formation.hpp"

#include <algorithm>

#include "grplat/arith.hpp"
#include "grplat/quotient.hpp"

namespace grplat {

namespace {

// subgroup generated by all commutators [a, b] with a in A, b in B
ElementSet commutator_set(const Group& parent, const ElementSet& a, const ElementSet& b) {
  ElementSet seed(static_cast<int>(parent.order()));
  seed.set(parent.identity_index());
  a.for_each([&](int x) {
    b.for_each([&](int y) {
      int c = parent.mul(parent.mul(parent.inv(x), parent.inv(y)), parent.mul(x, y));
      seed.set(c);
    });
  });
  return close_under_mul(parent, seed);
}

}  // namespace

std::vector<ElementSet> derived_series_subset(const Group& parent, const ElementSet& h) {
  std::vector<ElementSet> series{h};
  for (;;) {
    const ElementSet& last = series.back();
    ElementSet next = commutator_set(parent, last, last);
    if (next == last) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable_subset(const Group& parent, const ElementSet& h) {
  return derived_series_subset(parent, h).back().count() == 1;
}

bool is_nilpotent_subset(const Group& parent, const ElementSet& h) {
  ElementSet layer = h;
  for (;;) {
    ElementSet next = commutator_set(parent, h, layer);
    if (next == layer) break;
    layer = std::move(next);
  }
  return layer.count() == 1;
}

bool is_solvable(const Group& g) { return is_solvable_subset(g, full_element_set(g)); }

bool is_nilpotent(const Group& g) { return is_nilpotent_subset(g, full_element_set(g)); }

bool is_supersolvable(const Group& g) {
  if (g.order() == 1) return true;
  // A normal subgroup of prime order with supersolvable quotient exists iff
  // the group is supersolvable, and when it is, any such subgroup works, so
  // the first hit in element order decides the recursion.
  int n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x) {
    if (!is_prime(g.order_of(x))) continue;
    bool normal = true;
    ElementSet cyc(n);
    int p = g.identity_index();
    do {
      cyc.set(p);
      p = g.mul(p, x);
    } while (p != g.identity_index());
    for (int gen : g.generator_indices())
      if (!cyc.test(g.conj(x, gen))) {
        normal = false;
        break;
      }
    if (!normal) continue;
    return is_supersolvable(coset_action_quotient(g, full_element_set(g), cyc));
  }
  return false;
}

bool is_member(const Group& g, FormationTag t) {
  switch (t) {
    case FormationTag::Nilpotent:
      return is_nilpotent(g);
    case FormationTag::Supersolvable:
      return is_supersolvable(g);
    case FormationTag::Solvable:
      return is_solvable(g);
    case FormationTag::U1:
      return is_supersolvable(g) && is_square_free(exponent(g));
  }
  throw Error("unknown formation tag");
}

FormationTag tag_of(const std::string& name) {
  if (name == "N") return FormationTag::Nilpotent;
  if (name == "U") return FormationTag::Supersolvable;
  if (name == "S") return FormationTag::Solvable;
  if (name == "U1") return FormationTag::U1;
  throw Error("unknown formation: " + name);
}

std::string name_of(FormationTag t) {
  switch (t) {
    case FormationTag::Nilpotent:
      return "N";
    case FormationTag::Supersolvable:
      return "U";
    case FormationTag::Solvable:
      return "S";
    case FormationTag::U1:
      return "U1";
  }
  throw Error("unknown formation tag");
}

FormationRegistry FormationRegistry::with_builtins() {
  FormationRegistry reg;
  for (FormationTag t : {FormationTag::Nilpotent, FormationTag::Supersolvable,
                         FormationTag::Solvable, FormationTag::U1}) {
    Formation f;
    f.name = name_of(t);
    f.member = [t](const Group& g) { return is_member(g, t); };
    f.subgroup_closed = true;
    f.solvable = true;
    f.builtin = true;
    reg.formations_.push_back(std::move(f));
  }
  return reg;
}

const Formation& FormationRegistry::get(const std::string& name) const {
  const Formation* f = find(name);
  if (!f) throw Error("unknown formation: " + name);
  return *f;
}

const Formation* FormationRegistry::find(const std::string& name) const {
  for (const Formation& f : formations_)
    if (f.name == name) return &f;
  return nullptr;
}

const Formation& FormationRegistry::get(FormationTag t) const { return get(name_of(t)); }

void FormationRegistry::register_formation(Formation f) {
  if (f.name.empty()) throw Error("formation needs a name");
  if (!f.member) throw Error("formation needs a membership predicate");
  if (find(f.name)) throw Error("formation name already registered: " + f.name);
  f.builtin = false;
  formations_.push_back(std::move(f));
}

std::vector<std::string> FormationRegistry::builtin_names() const {
  std::vector<std::string> out;
  for (const Formation& f : formations_)
    if (f.builtin) out.push_back(f.name);
  return out;
}

int residual(const SubgroupLattice& lat, int k_idx, const Formation& f,
             ResidualCache* cache) {
  if (cache) {
    auto it = cache->memo.find({k_idx, f.name});
    if (it != cache->memo.end()) return it->second;
  }
  const Group& g = lat.group();
  int r = k_idx;
  for (int n = 0; n <= k_idx; ++n) {
    if (!lat.contains(n, k_idx) || !lat.is_normal_in(n, k_idx)) continue;
    Group quot = coset_action_quotient(g, lat.members(k_idx), lat.members(n));
    if (f.member(quot)) r = lat.meet(r, n);
  }
  // meets of kernels only give the residual for genuine formations (closed
  // under subdirect products); re-check so a registered impostor is caught
  Group check = coset_action_quotient(g, lat.members(k_idx), lat.members(r));
  if (!f.member(check))
    throw Error("class " + f.name + " is not a formation: quotient by the "
                "meet of kernels left the class");
  if (cache) cache->memo[{k_idx, f.name}] = r;
  return r;
}

int solvable_radical(const SubgroupLattice& lat) {
  int r = lat.trivial();
  for (int n = 0; n < lat.size(); ++n)
    if (lat.normal_in_parent(n) && is_solvable_subset(lat.group(), lat.members(n)))
      r = lat.join(r, n);
  if (!is_solvable_subset(lat.group(), lat.members(r)))
    throw Error("radical candidate is not solvable");
  return r;
}

int fitting_subgroup(const SubgroupLattice& lat) {
  int r = lat.trivial();
  for (int n = 0; n < lat.size(); ++n)
    if (lat.normal_in_parent(n) && is_nilpotent_subset(lat.group(), lat.members(n)))
      r = lat.join(r, n);
  if (!is_nilpotent_subset(lat.group(), lat.members(r)))
    throw Error("Fitting candidate is not nilpotent");
  return r;
}

}  // namespace grplat
