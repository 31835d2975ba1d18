#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "grplat/catalog.hpp"
#include "grplat/formation.hpp"
#include "grplat/verifier.hpp"
#include "json.hpp"
#include "oracles.hpp"

using grplat::CatalogEntry;
using grplat::CheckResult;
using grplat::CheckStatus;
using grplat::Error;
using grplat::Formation;
using grplat::FormationRegistry;
using grplat::GroupTask;
using grplat::Quantifier;
using grplat::Report;
using grplat::RunOptions;
using nlohmann::ordered_json;

namespace {

std::vector<CatalogEntry> corpus_of(std::initializer_list<const char*> names) {
  std::vector<CatalogEntry> out;
  for (const char* n : names) out.push_back(oracle::entry_of(n));
  return out;
}

ordered_json strip_timing(ordered_json j) {
  for (auto& row : j["results"]) row.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("quantifier below budget is exhaustive") {
  Quantifier q(10, 20, 42);
  CHECK_FALSE(q.sampled());
  CHECK(q.count() == 10);
  for (std::uint64_t i = 0; i < q.count(); ++i) CHECK(q.index(i) == i);
}

TEST_CASE("quantifier over budget subsamples deterministically") {
  Quantifier a(100000, 64, 7);
  Quantifier b(100000, 64, 7);
  Quantifier c(100000, 64, 8);
  CHECK(a.sampled());
  CHECK(a.count() == 64);
  bool all_same_as_c = true;
  for (std::uint64_t i = 0; i < a.count(); ++i) {
    CHECK(a.index(i) < 100000);
    CHECK(a.index(i) == b.index(i));
    if (a.index(i) != c.index(i)) all_same_as_c = false;
  }
  CHECK_FALSE(all_same_as_c);
}

TEST_CASE("statement ids resolve by prefix") {
  const auto& ids = grplat::all_statement_ids();
  CHECK(ids.size() == 17);
  CHECK(std::count(ids.begin(), ids.end(), "thm1") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "fixture.f7") == 1);
}

TEST_CASE("group task context") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  GroupTask t(oracle::entry_of("S4"), reg, opt);
  CHECK(t.group().order() == 24);
  CHECK(t.lattice().size() == 30);
  CHECK(t.statement_seed("thm1") != t.statement_seed("thm2"));

  // quotient contexts are cached per normal subgroup
  int a4 = -1;
  for (int i = 0; i < t.lattice().size(); ++i)
    if (t.lattice().order_of(i) == 12) a4 = i;
  REQUIRE(a4 >= 0);
  const auto& qc1 = t.quotient_context(a4);
  const auto& qc2 = t.quotient_context(a4);
  CHECK(&qc1 == &qc2);
  CHECK(qc1.q->quotient().order() == 2);
  CHECK(qc1.lat->size() == 2);

  ordered_json sj = t.subgroup_json(a4);
  CHECK(sj["order"] == 12);
  CHECK(sj["generators"].is_array());
}

TEST_CASE("single statement runs verify on the corpus groups") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  for (const char* name : {"S4", "F7", "A5", "D10"}) {
    CAPTURE(name);
    GroupTask t(oracle::entry_of(name), reg, opt);
    CHECK(grplat::verify_theorem1(t).status == CheckStatus::Verified);
    CHECK(grplat::verify_corollary2(t).status == CheckStatus::Verified);
    for (const char* f : {"N", "U", "S", "U1"}) {
      CHECK(grplat::verify_theorem2(t, reg.get(f)).status == CheckStatus::Verified);
      CHECK(grplat::verify_corollary1(t, reg.get(f)).status == CheckStatus::Verified);
    }
    for (const CheckResult& r : grplat::verify_lemma_suite(t, "lem"))
      CHECK(r.status == CheckStatus::Verified);
  }
}

TEST_CASE("theorem instances are counted") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  GroupTask t(oracle::entry_of("S4"), reg, opt);
  CheckResult r = grplat::verify_theorem1(t);
  // 24 prime-power-order subgroups of 30: 1 + 9 C2 + 4 C3 + 3 C4 + 4 V4 + 3 D8
  CHECK(r.detail["instances"] == 24);
}

TEST_CASE("fixture statement") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  GroupTask f7(oracle::entry_of("F7"), reg, opt);
  CheckResult r = grplat::verify_f7_fixture(f7);
  CHECK(r.status == CheckStatus::Verified);
  CHECK(r.detail["group_in_u1"] == true);
  CHECK(r.detail["all_subgroups_kfsub"] == true);
  CHECK(r.detail["c6_count"] == 7);
  CHECK(r.detail["submodular"] == false);
  CHECK(r.detail["kf_subnormal"] == true);

  GroupTask s4(oracle::entry_of("S4"), reg, opt);
  CHECK(grplat::verify_f7_fixture(s4).status == CheckStatus::Skipped);
}

TEST_CASE("corpus run shape") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  opt.jobs = 1;
  Report rep = run_corpus(corpus_of({"C1", "C2", "S3", "S4", "F7"}), opt, reg);
  CHECK(rep.results.size() == 5 * 37 + 1);  // fixture only on the order-42 group
  CHECK_FALSE(rep.has_counterexample());
  for (const CheckResult& r : rep.results) CHECK(r.status == CheckStatus::Verified);

  // rows arrive grouped by corpus order, statements in canonical order
  CHECK(rep.results.front().group == "C1");
  CHECK(rep.results.front().statement == "thm1");
  CHECK(rep.results.back().group == "F7");
  CHECK(rep.results.back().statement == "fixture.f7");

  ordered_json j = rep.to_json();
  CHECK(j["run_meta"]["seed"] == 1);
  CHECK(j["run_meta"]["statements"].size() == 17);
  CHECK(j["results"].size() == rep.results.size());
}

TEST_CASE("statement and formation filters") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  opt.jobs = 1;
  opt.statements = {"lem3"};
  Report rep = run_corpus(corpus_of({"S4"}), opt, reg);
  CHECK(rep.results.size() == 5);
  for (const CheckResult& r : rep.results)
    CHECK(r.statement.substr(0, 4) == "lem3");

  opt.statements = {"thm2"};
  opt.formations = {"N"};
  Report rep2 = run_corpus(corpus_of({"S4"}), opt, reg);
  CHECK(rep2.results.size() == 1);
  CHECK(rep2.results[0].formation == "N");

  opt.statements = {"lem5", "thm1"};
  opt.formations.clear();
  Report rep3 = run_corpus(corpus_of({"S4"}), opt, reg);
  REQUIRE(rep3.results.size() == 2);
  CHECK(rep3.results[0].statement == "thm1");  // canonical order, not input order
  CHECK(rep3.results[1].statement == "lem5");

  opt.statements = {"bogus"};
  CHECK_THROWS_WITH_AS(run_corpus(corpus_of({"S4"}), opt, reg),
                       doctest::Contains("unknown statement"), Error);
}

TEST_CASE("parallel and serial runs agree") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions serial;
  serial.jobs = 1;
  RunOptions parallel;
  parallel.jobs = 4;
  auto corpus = corpus_of({"S3", "S4", "F7", "D10", "A4"});
  ordered_json a = strip_timing(run_corpus(corpus, serial, reg).to_json());
  ordered_json b = strip_timing(run_corpus(corpus, parallel, reg).to_json());
  a["run_meta"].erase("jobs");
  b["run_meta"].erase("jobs");
  CHECK(a == b);
}

TEST_CASE("same seed gives identical reports") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  opt.jobs = 2;
  opt.seed = 99;
  auto corpus = corpus_of({"S4", "F7"});
  ordered_json a = strip_timing(run_corpus(corpus, opt, reg).to_json());
  ordered_json b = strip_timing(run_corpus(corpus, opt, reg).to_json());
  CHECK(a.dump() == b.dump());
}

TEST_CASE("tiny budgets force deterministic sampling") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  opt.jobs = 1;
  opt.pair_budget = 25;
  opt.seed = 3;
  opt.statements = {"lem1.1"};
  Report rep = run_corpus(corpus_of({"S4"}), opt, reg);
  bool saw_sampling = false;
  for (const CheckResult& r : rep.results) {
    CHECK(r.status == CheckStatus::Verified);
    if (r.detail.contains("sampled") && r.detail["sampled"] == true) {
      saw_sampling = true;
      CHECK(r.detail["visited"] == 25);
    }
  }
  CHECK(saw_sampling);

  ordered_json a = strip_timing(rep.to_json());
  ordered_json b = strip_timing(run_corpus(corpus_of({"S4"}), opt, reg).to_json());
  CHECK(a.dump() == b.dump());
}

TEST_CASE("over-cap groups are skipped with a reason") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  opt.jobs = 1;
  opt.order_cap = 50;
  Report rep = run_corpus(corpus_of({"S3", "S5"}), opt, reg);
  bool saw_skip = false;
  for (const CheckResult& r : rep.results) {
    if (r.group == "S5") {
      CHECK(r.status == CheckStatus::Skipped);
      CHECK_FALSE(r.detail["reason"].get<std::string>().empty());
      saw_skip = true;
    } else {
      CHECK(r.status == CheckStatus::Verified);
    }
  }
  CHECK(saw_skip);
  CHECK_FALSE(rep.has_counterexample());
}

TEST_CASE("a registered non-formation degrades to skipped rows") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  Formation cyc;
  cyc.name = "Cyc";
  cyc.member = [](const grplat::Group& g) {
    for (std::size_t i = 0; i < g.order(); ++i)
      if (g.order_of(static_cast<int>(i)) == g.order()) return true;
    return false;
  };
  reg.register_formation(cyc);
  RunOptions opt;
  opt.jobs = 1;
  opt.statements = {"thm2"};
  opt.formations = {"Cyc"};
  Report rep = run_corpus(corpus_of({"S4"}), opt, reg);
  REQUIRE(rep.results.size() == 1);
  CHECK(rep.results[0].status == CheckStatus::Skipped);
  CHECK(rep.results[0].detail["reason"].get<std::string>().find("not a formation") !=
        std::string::npos);
}

TEST_CASE("fixture details re-evaluate against a fresh context") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  GroupTask f7(oracle::entry_of("F7"), reg, opt);
  CheckResult r = grplat::verify_f7_fixture(f7);

  CHECK(grplat::reevaluate_detail(oracle::entry_of("F7"), r.statement, r.detail, reg, opt));

  ordered_json tampered = r.detail;
  tampered["submodular"] = true;
  CHECK_FALSE(
      grplat::reevaluate_detail(oracle::entry_of("F7"), r.statement, tampered, reg, opt));
}

TEST_CASE("fabricated counterexample details only reproduce when true") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  RunOptions opt;
  GroupTask t(oracle::entry_of("S4"), reg, opt);
  int c2 = oracle::sub_by_gens(t.lattice(), {"(1 2)"});
  bool sm = t.analyzer().is_submodular(c2, t.lattice().full());
  bool kf = t.analyzer().is_kf_subnormal(c2, t.lattice().full(),
                                         reg.get(grplat::FormationTag::U1));
  CHECK(sm == kf);  // no counterexample exists, so any honest record agrees

  ordered_json detail;
  detail["subgroup"] = t.subgroup_json(c2);
  detail["submodular"] = sm;
  detail["kf_subnormal"] = kf;
  CHECK(grplat::reevaluate_detail(oracle::entry_of("S4"), "thm1", detail, reg, opt));

  detail["kf_subnormal"] = !kf;
  CHECK_FALSE(grplat::reevaluate_detail(oracle::entry_of("S4"), "thm1", detail, reg, opt));

  ordered_json garbage;
  garbage["subgroup"] = {{"order", 2}, {"generators", {"(9 9)"}}};
  CHECK_FALSE(grplat::reevaluate_detail(oracle::entry_of("S4"), "thm1", garbage, reg, opt));
}

TEST_CASE("report counterexample bookkeeping") {
  Report rep;
  CHECK_FALSE(rep.has_counterexample());
  CheckResult bad;
  bad.statement = "thm1";
  bad.group = "S4";
  bad.status = CheckStatus::Counterexample;
  rep.results.push_back(bad);
  CHECK(rep.has_counterexample());
  CHECK(grplat::status_name(CheckStatus::Verified) == "verified");
  CHECK(grplat::status_name(CheckStatus::Counterexample) == "counterexample");
  CHECK(grplat::status_name(CheckStatus::Skipped) == "skipped");
}
