#include "grplat/embeddings.hpp"

#include <algorithm>

namespace grplat {

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Normal:
      return "normal";
    case StepKind::Residual:
      return "residual";
    case StepKind::Modular:
      return "modular";
  }
  throw Error("unknown step kind");
}

bool simplicity_check(const Group& g) {
  int n = static_cast<int>(g.order());
  if (n <= 1) return false;
  for (int x = 1; x < n; ++x) {
    ElementSet s(n);
    s.set(g.identity_index());
    s.set(x);
    s = close_under_mul(g, s);
    for (;;) {
      ElementSet grown = s;
      s.for_each([&](int m) {
        for (int gen : g.generator_indices()) grown.set(g.conj(m, gen));
      });
      if (grown == s) break;
      s = close_under_mul(g, std::move(grown));
      if (s.count() == n) break;
    }
    if (s.count() != n) return false;
  }
  return true;
}

Analyzer::Analyzer(std::shared_ptr<const SubgroupLattice> lat, const FormationRegistry& reg)
    : lat_(std::move(lat)), reg_(&reg) {
  std::size_t m = static_cast<std::size_t>(lat_->size());
  modular_.assign(m * m, -1);
  below_.resize(m);
  solvable_.assign(m, -1);
  nilpotent_.assign(m, -1);
}

const std::vector<int>& Analyzer::below(int k) const {
  if (below_[k].empty()) below_[k] = lat_->subgroups_below(k);
  return below_[k];
}

bool Analyzer::is_subnormal(int h, int amb) const {
  if (!lat_->contains(h, amb))
    throw Error("subnormality asked for a non-subgroup pair");
  int k = amb;
  for (;;) {
    int next = lat_->normal_closure(h, k);
    if (next == k) break;
    k = next;
  }
  return k == h;
}

bool Analyzer::is_modular(int h, int k) const {
  if (!lat_->contains(h, k)) throw Error("modularity asked for a non-subgroup pair");
  std::int8_t& memo = modular_[static_cast<std::size_t>(h) * lat_->size() + k];
  if (memo >= 0) return memo != 0;

  const std::vector<int>& subs = below(k);
  bool ok = true;
  // (X v H) ^ Z = X v (H ^ Z) whenever X <= Z <= k
  for (std::size_t zi = 0; ok && zi < subs.size(); ++zi) {
    int z = subs[zi];
    int hz = lat_->meet(h, z);
    for (int x : subs) {
      if (!lat_->contains(x, z)) continue;
      if (lat_->meet(lat_->join(x, h), z) != lat_->join(x, hz)) {
        ok = false;
        break;
      }
    }
  }
  // (Y v H) ^ Z = (Y ^ Z) v H whenever H <= Z <= k, any Y <= k
  for (std::size_t zi = 0; ok && zi < subs.size(); ++zi) {
    int z = subs[zi];
    if (!lat_->contains(h, z)) continue;
    for (int y : subs) {
      if (lat_->meet(lat_->join(y, h), z) != lat_->join(lat_->meet(y, z), h)) {
        ok = false;
        break;
      }
    }
  }
  memo = ok ? 1 : 0;
  return ok;
}

bool Analyzer::is_submodular(int h, int amb) const {
  if (!lat_->contains(h, amb))
    throw Error("submodularity asked for a non-subgroup pair");
  if (h == amb) return true;
  auto key = std::make_pair(h, amb);
  auto it = submodular_memo_.find(key);
  if (it != submodular_memo_.end()) return it->second;
  submodular_memo_[key] = false;  // cuts cycles; overwritten on success

  // larger candidates first keeps witness chains short
  const std::vector<int>& subs = below(amb);
  for (std::size_t i = subs.size(); i-- > 0;) {
    int k = subs[i];
    if (k == h || !lat_->contains(h, k)) continue;
    if (!is_modular(h, k)) continue;
    if (!is_submodular(k, amb)) continue;
    submodular_memo_[key] = true;
    submodular_succ_[key] = k;
    return true;
  }
  return false;
}

std::optional<WitnessChain> Analyzer::submodular_chain(int h, int amb) const {
  if (!is_submodular(h, amb)) return std::nullopt;
  return chain_from_successors(h, amb, submodular_succ_, nullptr);
}

int Analyzer::residual(int k, const Formation& f) const {
  return grplat::residual(*lat_, k, f, &residuals_);
}

bool Analyzer::kf_edge(int h, int k, const Formation& f) const {
  if (lat_->is_normal_in(h, k)) return true;
  return lat_->contains(residual(k, f), h);
}

bool Analyzer::is_kf_subnormal(int h, int amb, const Formation& f) const {
  if (!lat_->contains(h, amb))
    throw Error("KF-subnormality asked for a non-subgroup pair");
  if (h == amb) return true;
  auto& memo = kfsub_memo_[f.name];
  auto& succ = kfsub_succ_[f.name];
  auto key = std::make_pair(h, amb);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  memo[key] = false;

  const std::vector<int>& subs = below(amb);
  for (std::size_t i = subs.size(); i-- > 0;) {
    int k = subs[i];
    if (k == h || !lat_->contains(h, k)) continue;
    if (!kf_edge(h, k, f)) continue;
    if (!is_kf_subnormal(k, amb, f)) continue;
    memo[key] = true;
    succ[key] = k;
    return true;
  }
  return false;
}

std::optional<WitnessChain> Analyzer::kf_subnormal_chain(int h, int amb,
                                                         const Formation& f) const {
  if (!is_kf_subnormal(h, amb, f)) return std::nullopt;
  return chain_from_successors(h, amb, kfsub_succ_[f.name], &f);
}

WitnessChain Analyzer::chain_from_successors(int h, int amb,
                                             const std::map<std::pair<int, int>, int>& succ,
                                             const Formation* f) const {
  WitnessChain chain;
  chain.steps.push_back(lat_->ref(h));
  int cur = h;
  while (cur != amb) {
    auto it = succ.find({cur, amb});
    if (it == succ.end()) throw Error("witness chain bookkeeping is inconsistent");
    int next = it->second;
    if (!f) {
      chain.kinds.push_back(StepKind::Modular);
    } else if (lat_->is_normal_in(cur, next)) {
      chain.kinds.push_back(StepKind::Normal);
    } else if (lat_->contains(residual(next, *f), cur)) {
      chain.kinds.push_back(StepKind::Residual);
    } else {
      throw Error("witness chain bookkeeping is inconsistent");
    }
    chain.steps.push_back(lat_->ref(next));
    cur = next;
  }
  return chain;
}

StarOvergroup Analyzer::star_overgroup(int h, int amb, const Formation& f) const {
  if (h == amb) throw Error("star overgroup is undefined for the whole ambient subgroup");
  if (!is_kf_subnormal(h, amb, f))
    throw Error("star overgroup asked for a non-KF-subnormal subgroup");

  // proper KF-subnormal overgroups of h (h is one of them)
  std::vector<int> candidates;
  for (int s : below(amb)) {
    if (s == amb || !lat_->contains(h, s)) continue;
    if (is_kf_subnormal(s, amb, f)) candidates.push_back(s);
  }
  int star = -1;
  for (int s : candidates) {  // ascending, so ties go to the smallest index
    bool maximal = true;
    for (int t : candidates)
      if (t != s && lat_->contains(s, t)) {
        maximal = false;
        break;
      }
    if (maximal) {
      star = s;
      break;
    }
  }
  if (star < 0) throw Error("no maximal proper KF-subnormal overgroup found");

  StarOvergroup out;
  out.star = lat_->ref(star);
  const Group& g = lat_->group();
  if (lat_->is_normal_in(star, amb)) {
    Group quot = coset_action_quotient(g, lat_->members(amb), lat_->members(star));
    out.branch.normal_simple = simplicity_check(quot);
  }
  if (lat_->is_maximal_in(star, amb)) {
    int c = lat_->core(star, amb);
    Group quot = coset_action_quotient(g, lat_->members(amb), lat_->members(c));
    out.branch.maximal_f_quotient = f.member(quot);
  }
  if (!out.branch.normal_simple && !out.branch.maximal_f_quotient)
    throw Error("maximal KF-subnormal overgroup fits neither structural branch");
  return out;
}

bool Analyzer::subgroup_solvable(int h) const {
  std::int8_t& memo = solvable_[h];
  if (memo < 0) memo = is_solvable_subset(lat_->group(), lat_->members(h)) ? 1 : 0;
  return memo != 0;
}

bool Analyzer::subgroup_nilpotent(int h) const {
  std::int8_t& memo = nilpotent_[h];
  if (memo < 0) memo = is_nilpotent_subset(lat_->group(), lat_->members(h)) ? 1 : 0;
  return memo != 0;
}

int Analyzer::solvable_radical() const {
  if (radical_ < 0) radical_ = grplat::solvable_radical(*lat_);
  return radical_;
}

int Analyzer::fitting_subgroup() const {
  if (fitting_ < 0) fitting_ = grplat::fitting_subgroup(*lat_);
  return fitting_;
}

bool Analyzer::validate_chain(const WitnessChain& c, const Formation* f) const {
  if (c.steps.empty()) return false;
  if (c.kinds.size() + 1 != c.steps.size()) return false;
  for (const SubgroupRef& r : c.steps) {
    if (r.index < 0 || r.index >= lat_->size()) return false;
    if (r.order != lat_->order_of(r.index)) return false;
  }
  for (std::size_t i = 0; i < c.kinds.size(); ++i) {
    int lo = c.steps[i].index, hi = c.steps[i + 1].index;
    if (lo == hi || !lat_->contains(lo, hi)) return false;
    switch (c.kinds[i]) {
      case StepKind::Normal:
        if (!lat_->is_normal_in(lo, hi)) return false;
        break;
      case StepKind::Residual:
        if (!f) throw Error("residual chain link needs a formation");
        if (!lat_->contains(residual(hi, *f), lo)) return false;
        break;
      case StepKind::Modular:
        if (!is_modular(lo, hi)) return false;
        break;
    }
  }
  return true;
}

const QuotientGroup& Analyzer::parent_quotient(int n_idx) const {
  auto it = parent_quotients_.find(n_idx);
  if (it == parent_quotients_.end()) {
    auto q = std::make_unique<QuotientGroup>(quotient(*lat_, n_idx));
    it = parent_quotients_.emplace(n_idx, std::move(q)).first;
  }
  return *it->second;
}

}  // namespace grplat
