#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "grplat/catalog.hpp"
#include "grplat/embeddings.hpp"

#include "json.hpp"

namespace grplat {

enum class CheckStatus { Verified, Counterexample, Skipped };
std::string status_name(CheckStatus s);

// Outcome of one statement on one group.  A Counterexample carries a
// machine-re-checkable violating tuple in `detail`; a Skipped result
// carries a reason.
struct CheckResult {
  std::string statement;  // "thm1", "lem3.4", "cor1", ...
  std::string group;
  std::string formation;  // empty when the statement has no formation input
  CheckStatus status = CheckStatus::Verified;
  nlohmann::ordered_json detail;
  double elapsed_ms = 0.0;
};

struct RunOptions {
  std::uint64_t seed = 1;
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t subgroup_limit = kDefaultSubgroupLimit;
  // statement-level quantifier loops larger than this are deterministically
  // subsampled (seeded); predicate evaluation itself is always exact
  std::uint64_t pair_budget = 5000000;
  std::vector<std::string> statements;  // ids or prefixes; empty = all
  std::vector<std::string> formations;  // registry names; empty = built-ins
  int jobs = 0;                         // 0 = hardware concurrency
  std::string catalog_label = "default";
};

struct Report {
  nlohmann::ordered_json run_meta;
  std::vector<CheckResult> results;
  bool has_counterexample() const;
  nlohmann::ordered_json to_json() const;
};

// Deterministic subsampling of a quantifier domain of `total` points.
class Quantifier {
 public:
  Quantifier(std::uint64_t total, std::uint64_t budget, std::uint64_t seed);
  bool sampled() const { return sampled_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t index(std::uint64_t i) const;  // i-th visited domain point

 private:
  std::uint64_t total_;
  std::uint64_t count_;
  bool sampled_;
  std::uint64_t seed_;
};

// Per-group verification context shared by the statement checks: the
// materialized group, its lattice and analyzer, and lazily-built quotient
// contexts (quotient lattice + analyzer) per normal subgroup.
class GroupTask {
 public:
  GroupTask(CatalogEntry entry, const FormationRegistry& reg, const RunOptions& opt);

  const CatalogEntry& entry() const { return entry_; }
  const Group& group() const { return *group_; }
  const SubgroupLattice& lattice() const { return *lat_; }
  Analyzer& analyzer() const { return *an_; }
  const FormationRegistry& registry() const { return *reg_; }
  const RunOptions& options() const { return opt_; }

  struct QuotientContext {
    const QuotientGroup* q = nullptr;  // owned by the analyzer cache
    std::shared_ptr<const SubgroupLattice> lat;
    std::unique_ptr<Analyzer> an;
  };
  const QuotientContext& quotient_context(int n_idx) const;

  // seed for one statement's quantifier, derived from run seed + labels
  std::uint64_t statement_seed(const std::string& statement) const;

  nlohmann::ordered_json subgroup_json(int idx) const;

 private:
  CatalogEntry entry_;
  const FormationRegistry* reg_;
  RunOptions opt_;
  std::shared_ptr<const Group> group_;
  std::shared_ptr<const SubgroupLattice> lat_;
  std::unique_ptr<Analyzer> an_;
  mutable std::map<int, QuotientContext> qctx_;
};

CheckResult verify_theorem1(const GroupTask& t);
CheckResult verify_theorem2(const GroupTask& t, const Formation& f);
CheckResult verify_corollary1(const GroupTask& t, const Formation& f);
CheckResult verify_corollary2(const GroupTask& t);
std::vector<CheckResult> verify_lemma_suite(const GroupTask& t, const std::string& selector);
CheckResult verify_f7_fixture(const GroupTask& t);

const std::vector<std::string>& all_statement_ids();

Report run_corpus(const std::vector<CatalogEntry>& corpus, const RunOptions& opt,
                  const FormationRegistry& reg);

// Re-evaluates the predicates recorded in a counterexample/fixture detail
// against a fresh task; true when the recorded values reproduce.
bool reevaluate_detail(const CatalogEntry& entry, const std::string& statement,
                       const nlohmann::ordered_json& detail, const FormationRegistry& reg,
                       const RunOptions& opt);

}  // namespace grplat
