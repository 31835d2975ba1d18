#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grplat/formation.hpp"
#include "grplat/lattice.hpp"
#include "grplat/quotient.hpp"

namespace grplat {

enum class StepKind { Normal, Residual, Modular };
std::string step_kind_name(StepKind k);

// An ascending subgroup chain certifying a chain-defined embedding
// predicate; kinds[i] tags the link steps[i] <= steps[i+1].  Chains are
// strictly increasing except for the degenerate one-element chain H = G
// (repeated terms are always removable since every subgroup is normal in
// itself).
struct WitnessChain {
  std::vector<SubgroupRef> steps;
  std::vector<StepKind> kinds;
};

// |G| > 1 and the only normal subgroups are trivial and G; decided by
// checking that every non-identity element has full normal closure.
bool simplicity_check(const Group& g);

struct StarBranch {
  bool normal_simple = false;      // star normal in G with simple quotient
  bool maximal_f_quotient = false; // star maximal in G with G/core in F
};

struct StarOvergroup {
  SubgroupRef star;
  StarBranch branch;
};

// Evaluates the chain-defined embedding predicates over one lattice, with
// memoization for modularity, submodularity, KF-subnormality, residuals and
// per-subgroup solvability.  Not thread-safe: use one Analyzer per worker.
class Analyzer {
 public:
  Analyzer(std::shared_ptr<const SubgroupLattice> lat, const FormationRegistry& reg);

  const SubgroupLattice& lattice() const { return *lat_; }
  std::shared_ptr<const SubgroupLattice> lattice_ptr() const { return lat_; }
  const FormationRegistry& registry() const { return *reg_; }

  // the normal-closure series of h descending from amb reaches h
  bool is_subnormal(int h, int amb) const;

  // h is a modular element of k's own subgroup lattice: for all X <= Z <= k,
  // (X v H) ^ Z = X v (H ^ Z), and for all Y, Z <= k with H <= Z,
  // (Y v H) ^ Z = (Y ^ Z) v H.
  bool is_modular(int h, int k) const;

  // chain from h to amb whose links are modular steps
  bool is_submodular(int h, int amb) const;
  std::optional<WitnessChain> submodular_chain(int h, int amb) const;

  // chain from h to amb where each link is normal or absorbs the F-residual
  // of its upper term
  bool is_kf_subnormal(int h, int amb, const Formation& f) const;
  std::optional<WitnessChain> kf_subnormal_chain(int h, int amb, const Formation& f) const;

  // A maximal proper KF-subnormal overgroup of h in amb (smallest lattice
  // index when several are maximal), classified by which branch it
  // satisfies: normal with simple quotient, or maximal with amb/core in F.
  // Throws when h is not KF-subnormal, h = amb, or neither branch holds.
  StarOvergroup star_overgroup(int h, int amb, const Formation& f) const;

  int residual(int k, const Formation& f) const;
  bool subgroup_solvable(int h) const;
  bool subgroup_nilpotent(int h) const;
  int solvable_radical() const;
  int fitting_subgroup() const;

  // re-verifies every link of a chain against the predicate definitions;
  // f is required for chains containing residual steps
  bool validate_chain(const WitnessChain& c, const Formation* f) const;

  // quotient of the parent by a normal lattice member, cached
  const QuotientGroup& parent_quotient(int n_idx) const;

 private:
  bool kf_edge(int h, int k, const Formation& f) const;
  const std::vector<int>& below(int k) const;
  WitnessChain chain_from_successors(int h, int amb,
                                     const std::map<std::pair<int, int>, int>& succ,
                                     const Formation* f) const;

  std::shared_ptr<const SubgroupLattice> lat_;
  const FormationRegistry* reg_;

  mutable std::vector<std::int8_t> modular_;  // n*n tri-state
  mutable std::vector<std::vector<int>> below_;
  mutable std::map<std::pair<int, int>, bool> submodular_memo_;
  mutable std::map<std::pair<int, int>, int> submodular_succ_;
  mutable std::map<std::string, std::map<std::pair<int, int>, bool>> kfsub_memo_;
  mutable std::map<std::string, std::map<std::pair<int, int>, int>> kfsub_succ_;
  mutable ResidualCache residuals_;
  mutable std::vector<std::int8_t> solvable_;   // per subgroup tri-state
  mutable std::vector<std::int8_t> nilpotent_;  // per subgroup tri-state
  mutable int radical_ = -1;
  mutable int fitting_ = -1;
  mutable std::map<int, std::unique_ptr<QuotientGroup>> parent_quotients_;
};

}  // namespace grplat
