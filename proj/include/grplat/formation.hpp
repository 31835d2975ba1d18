#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "grplat/group.hpp"
#include "grplat/lattice.hpp"

namespace grplat {

enum class FormationTag { Nilpotent, Supersolvable, Solvable, U1 };

// A class of groups with a membership predicate.  The four built-ins are
// genuine formations (closed under quotients and subdirect products);
// user-registered predicates carry builtin = false and are reported as
// unverified, and residual computation cross-checks them after the fact.
struct Formation {
  std::string name;  // "N", "U", "S", "U1"
  std::function<bool(const Group&)> member;
  bool subgroup_closed = true;
  bool solvable = true;  // contained in the class of solvable groups
  bool builtin = false;
};

class FormationRegistry {
 public:
  static FormationRegistry with_builtins();

  const Formation& get(const std::string& name) const;  // throws on miss
  const Formation* find(const std::string& name) const;
  const Formation& get(FormationTag t) const;
  void register_formation(Formation f);  // builtin flag is forced off
  const std::vector<Formation>& all() const { return formations_; }
  std::vector<std::string> builtin_names() const;

 private:
  std::vector<Formation> formations_;
};

// Derived series reaches the trivial subgroup.
bool is_solvable(const Group& g);

// Lower central series reaches the trivial subgroup; equivalent to every
// Sylow subgroup being normal (the test suite checks the two routes agree).
bool is_nilpotent(const Group& g);

// Trivial, or has a normal subgroup of prime order with supersolvable
// quotient; evaluated by recursion over quotients.
bool is_supersolvable(const Group& g);

bool is_member(const Group& g, FormationTag t);
FormationTag tag_of(const std::string& name);
std::string name_of(FormationTag t);

// Variants evaluated on a subgroup given as an element set of a parent.
bool is_solvable_subset(const Group& parent, const ElementSet& h);
bool is_nilpotent_subset(const Group& parent, const ElementSet& h);
std::vector<ElementSet> derived_series_subset(const Group& parent, const ElementSet& h);

struct ResidualCache {
  std::map<std::pair<int, std::string>, int> memo;
};

// F-residual of a lattice member K: the meet of all subgroups N normal in K
// with K/N in F.  The result is verified to have its own quotient in F,
// which guards against a registered predicate that is not a formation.
int residual(const SubgroupLattice& lat, int k_idx, const Formation& f,
             ResidualCache* cache = nullptr);

// largest normal solvable subgroup (join of all of them, verified solvable)
int solvable_radical(const SubgroupLattice& lat);

// largest normal nilpotent subgroup (join of all of them, verified nilpotent)
int fitting_subgroup(const SubgroupLattice& lat);

}  // namespace grplat
