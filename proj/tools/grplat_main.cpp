#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grplat/arith.hpp"
#include "grplat/catalog.hpp"
#include "grplat/embeddings.hpp"
#include "grplat/formation.hpp"
#include "grplat/group.hpp"
#include "grplat/lattice.hpp"
#include "grplat/verifier.hpp"

namespace {

using namespace grplat;

struct GroupSpec {
  std::string group;
  std::string gens;
  int degree = 0;
  std::string catalog_path;
};

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    std::size_t a = cur.find_first_not_of(" \t");
    std::size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(cur.substr(a, b - a + 1));
  }
  return out;
}

std::vector<CatalogEntry> active_catalog(const std::string& flag_path) {
  if (!flag_path.empty()) return load_catalog(flag_path);
  if (const char* env = std::getenv("GRPLAT_CATALOG")) return load_catalog(env);
  return default_catalog();
}

std::string active_catalog_label(const std::string& flag_path) {
  if (!flag_path.empty()) return flag_path;
  if (const char* env = std::getenv("GRPLAT_CATALOG")) return env;
  return "default";
}

CatalogEntry resolve_entry(const GroupSpec& spec) {
  if (!spec.gens.empty()) {
    if (spec.degree < 1) throw Error("--gens needs --degree");
    CatalogEntry e;
    e.name = "adhoc";
    e.degree = spec.degree;
    e.generators = split_list(spec.gens, ';');
    return e;
  }
  if (spec.group.empty()) throw Error("select a group with --group or --gens");
  if (spec.group.front() == '@') {
    std::string path = spec.group.substr(1);
    std::ifstream in(path);
    if (!in) throw Error("cannot open group file: " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& ex) {
      throw Error("group file " + path + ": " + ex.what());
    }
    auto entries = parse_catalog(nlohmann::json{{"groups", nlohmann::json::array({j})}});
    return entries.front();
  }
  for (const CatalogEntry& e : active_catalog(spec.catalog_path))
    if (e.name == spec.group) return e;
  throw Error("group not in catalog: " + spec.group);
}

struct Session {
  CatalogEntry entry;
  std::shared_ptr<const Group> group;
  std::shared_ptr<const SubgroupLattice> lat;
  FormationRegistry registry = FormationRegistry::with_builtins();
  std::unique_ptr<Analyzer> an;
};

Session open_session(const GroupSpec& spec, std::size_t cap, std::size_t sub_limit) {
  Session s;
  s.entry = resolve_entry(spec);
  s.group = std::make_shared<const Group>(realize(s.entry, cap));
  s.lat = std::make_shared<const SubgroupLattice>(SubgroupLattice::build(s.group, sub_limit));
  s.an = std::make_unique<Analyzer>(s.lat, s.registry);
  return s;
}

int locate_sub(const Session& s, const std::string& gens) {
  std::vector<int> elems;
  for (const std::string& g : split_list(gens, ';')) {
    Permutation p = parse_permutation(g, s.group->degree());
    int idx = s.group->index_of(p);
    if (idx < 0) throw Error("element is not in the group: " + g);
    elems.push_back(idx);
  }
  return s.lat->subgroup_generated_by(elems);
}

nlohmann::ordered_json subgroup_json(const Session& s, int idx) {
  nlohmann::ordered_json j;
  j["order"] = s.lat->order_of(idx);
  j["generators"] = s.lat->generator_strings(idx);
  return j;
}

std::string subgroup_text(const Session& s, int idx) {
  std::string out = "order " + std::to_string(s.lat->order_of(idx)) + ", <";
  auto gens = s.lat->generator_strings(idx);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i];
  }
  return out + ">";
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_info(const GroupSpec& spec, std::size_t cap, std::size_t sub_limit,
             const std::string& format) {
  Session s = open_session(spec, cap, sub_limit);
  const Group& g = *s.group;
  const SubgroupLattice& lat = *s.lat;
  nlohmann::ordered_json j;
  j["name"] = s.entry.name;
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["exponent"] = exponent(g);
  j["primes"] = prime_divisors(g);
  j["center_order"] = lat.order_of(lat.center());
  j["solvable"] = is_solvable(g);
  j["nilpotent"] = is_nilpotent(g);
  j["supersolvable"] = is_supersolvable(g);
  j["u1"] = is_member(g, FormationTag::U1);
  j["solvable_radical_order"] = lat.order_of(s.an->solvable_radical());
  j["fitting_order"] = lat.order_of(s.an->fitting_subgroup());
  j["subgroup_count"] = lat.size();
  if (format == "json") {
    emit(j);
    return 0;
  }
  if (format == "dot") throw Error("info has no dot rendering");
  for (auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
  return 0;
}

int cmd_subgroups(const GroupSpec& spec, std::size_t cap, std::size_t sub_limit,
                  const std::string& format) {
  Session s = open_session(spec, cap, sub_limit);
  const SubgroupLattice& lat = *s.lat;
  if (format == "dot") {
    std::cout << "graph subgroups {\n  rankdir=BT;\n";
    for (int i = 0; i < lat.size(); ++i)
      std::cout << "  n" << i << " [label=\"" << i << ": " << lat.order_of(i) << "\"];\n";
    for (auto [sub, super] : lat.cover_edges())
      std::cout << "  n" << sub << " -- n" << super << ";\n";
    std::cout << "}\n";
    return 0;
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["group"] = s.entry.name;
    j["count"] = lat.size();
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < lat.size(); ++i) {
      nlohmann::ordered_json row;
      row["index"] = i;
      row["order"] = lat.order_of(i);
      row["generators"] = lat.generator_strings(i);
      row["normal"] = lat.normal_in_parent(i);
      rows.push_back(std::move(row));
    }
    j["subgroups"] = std::move(rows);
    emit(j);
    return 0;
  }
  std::cout << s.entry.name << ": " << lat.size() << " subgroups\n";
  for (int i = 0; i < lat.size(); ++i)
    std::cout << "  [" << i << "] " << subgroup_text(s, i)
              << (lat.normal_in_parent(i) ? " normal" : "") << "\n";
  return 0;
}

int cmd_check(const std::string& kind, const GroupSpec& spec, const std::string& sub,
              const std::string& amb, const std::string& formation, std::size_t cap,
              std::size_t sub_limit, const std::string& format) {
  Session s = open_session(spec, cap, sub_limit);
  int h = locate_sub(s, sub);
  int a = amb.empty() ? s.lat->full() : locate_sub(s, amb);
  bool result = false;
  std::string fname;
  if (kind == "subnormal") {
    result = s.an->is_subnormal(h, a);
  } else if (kind == "modular") {
    result = s.an->is_modular(h, a);
  } else if (kind == "submodular") {
    result = s.an->is_submodular(h, a);
  } else if (kind == "kfsub") {
    if (formation.empty()) throw Error("check kfsub needs --formation");
    const Formation& f = s.registry.get(formation);
    fname = f.name;
    result = s.an->is_kf_subnormal(h, a, f);
  } else {
    throw Error("unknown predicate: " + kind);
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["predicate"] = kind;
    j["group"] = s.entry.name;
    j["subgroup"] = subgroup_json(s, h);
    j["ambient"] = subgroup_json(s, a);
    if (!fname.empty()) j["formation"] = fname;
    j["result"] = result;
    emit(j);
  } else {
    std::cout << kind << "(" << subgroup_text(s, h) << " in " << subgroup_text(s, a)
              << (fname.empty() ? "" : ", " + fname) << ") = "
              << (result ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_chain(const std::string& kind, const GroupSpec& spec, const std::string& sub,
              const std::string& amb, const std::string& formation, std::size_t cap,
              std::size_t sub_limit, const std::string& format) {
  Session s = open_session(spec, cap, sub_limit);
  int h = locate_sub(s, sub);
  int a = amb.empty() ? s.lat->full() : locate_sub(s, amb);
  std::optional<WitnessChain> chain;
  std::string fname;
  if (kind == "submodular") {
    chain = s.an->submodular_chain(h, a);
  } else if (kind == "kfsub") {
    if (formation.empty()) throw Error("chain kfsub needs --formation");
    const Formation& f = s.registry.get(formation);
    fname = f.name;
    chain = s.an->kf_subnormal_chain(h, a, f);
  } else {
    throw Error("unknown chain predicate: " + kind);
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["predicate"] = kind;
    j["group"] = s.entry.name;
    if (!fname.empty()) j["formation"] = fname;
    j["exists"] = chain.has_value();
    if (chain) {
      auto steps = nlohmann::ordered_json::array();
      for (const SubgroupRef& ref : chain->steps) steps.push_back(subgroup_json(s, ref.index));
      auto kinds = nlohmann::ordered_json::array();
      for (StepKind k : chain->kinds) kinds.push_back(step_kind_name(k));
      j["steps"] = std::move(steps);
      j["kinds"] = std::move(kinds);
    }
    emit(j);
    return 0;
  }
  if (format == "dot") {
    if (!chain) throw Error("no chain to render");
    std::cout << "digraph chain {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < chain->steps.size(); ++i)
      std::cout << "  n" << i << " [label=\"order " << chain->steps[i].order << "\"];\n";
    for (std::size_t i = 0; i < chain->kinds.size(); ++i)
      std::cout << "  n" << i << " -> n" << i + 1 << " [label=\""
                << step_kind_name(chain->kinds[i]) << "\"];\n";
    std::cout << "}\n";
    return 0;
  }
  if (!chain) {
    std::cout << "no chain\n";
    return 0;
  }
  for (std::size_t i = 0; i < chain->steps.size(); ++i) {
    std::cout << subgroup_text(s, chain->steps[i].index) << "\n";
    if (i < chain->kinds.size())
      std::cout << "  -[" << step_kind_name(chain->kinds[i]) << "]->\n";
  }
  return 0;
}

int cmd_residual(const GroupSpec& spec, const std::string& sub, const std::string& formation,
                 std::size_t cap, std::size_t sub_limit, const std::string& format) {
  Session s = open_session(spec, cap, sub_limit);
  if (formation.empty()) throw Error("residual needs --formation");
  const Formation& f = s.registry.get(formation);
  int k = sub.empty() ? s.lat->full() : locate_sub(s, sub);
  int r = s.an->residual(k, f);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["group"] = s.entry.name;
    j["formation"] = f.name;
    j["subgroup"] = subgroup_json(s, k);
    j["residual"] = subgroup_json(s, r);
    emit(j);
  } else {
    std::cout << f.name << "-residual of " << subgroup_text(s, k) << " is "
              << subgroup_text(s, r) << "\n";
  }
  return 0;
}

int cmd_verify(const RunOptions& opt_in, const std::string& catalog_path,
               const std::vector<std::string>& groups,
               const std::string& out_path, const std::string& format) {
  RunOptions opt = opt_in;
  opt.catalog_label = active_catalog_label(catalog_path);
  std::vector<CatalogEntry> corpus = active_catalog(catalog_path);
  if (!groups.empty()) {
    std::vector<CatalogEntry> picked;
    for (const std::string& name : groups) {
      auto it = std::find_if(corpus.begin(), corpus.end(),
                             [&](const CatalogEntry& e) { return e.name == name; });
      if (it == corpus.end()) throw Error("unknown catalog group: " + name);
      picked.push_back(*it);
    }
    corpus = std::move(picked);
  }
  FormationRegistry reg = FormationRegistry::with_builtins();
  Report rep = run_corpus(corpus, opt, reg);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write report: " + out_path);
    out << rep.to_json().dump(2) << "\n";
  }
  if (format == "json") {
    emit(rep.to_json());
  } else {
    std::size_t verified = 0, skipped = 0, counterexamples = 0;
    for (const CheckResult& r : rep.results) {
      if (r.status == CheckStatus::Verified) ++verified;
      if (r.status == CheckStatus::Skipped) ++skipped;
      if (r.status == CheckStatus::Counterexample) ++counterexamples;
      std::cout << r.statement << " " << r.group
                << (r.formation.empty() ? "" : " [" + r.formation + "]") << ": "
                << status_name(r.status);
      if (r.status != CheckStatus::Verified) std::cout << " " << r.detail.dump();
      std::cout << "\n";
    }
    std::cout << "verified " << verified << ", skipped " << skipped
              << ", counterexamples " << counterexamples << "\n";
  }
  return rep.has_counterexample() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subgroup lattices, embedding predicates and corpus verification"};
  app.require_subcommand(1);

  GroupSpec spec;
  std::size_t cap = kDefaultOrderCap;
  std::size_t sub_limit = kDefaultSubgroupLimit;
  std::string format = "text";
  std::string sub, amb, formation, kind;

  auto add_common = [&](CLI::App* c, bool with_group) {
    if (with_group) {
      c->add_option("--group", spec.group, "catalog group name, or @file with one entry");
      c->add_option("--gens", spec.gens, "generators in cycle notation, ';'-separated");
      c->add_option("--degree", spec.degree, "degree for --gens");
      c->add_option("--catalog", spec.catalog_path, "catalog file (default: built-in)");
    }
    c->add_option("--cap", cap, "group order cap");
    c->add_option("--sub-limit", sub_limit, "subgroup count limit");
    c->add_option("--format", format, "text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };

  int rc = 0;

  CLI::App* info = app.add_subcommand("info", "group facts and class membership");
  add_common(info, true);
  info->callback([&] { rc = cmd_info(spec, cap, sub_limit, format); });

  CLI::App* subs = app.add_subcommand("subgroups", "enumerate the subgroup lattice");
  add_common(subs, true);
  subs->callback([&] { rc = cmd_subgroups(spec, cap, sub_limit, format); });

  CLI::App* check = app.add_subcommand("check", "evaluate an embedding predicate");
  check->add_option("predicate", kind, "subnormal, modular, submodular or kfsub")
      ->required();
  check->add_option("--sub", sub, "subgroup generators, ';'-separated")->required();
  check->add_option("--amb", amb, "ambient subgroup generators (default: whole group)");
  check->add_option("--formation", formation, "N, U, S or U1 (kfsub only)");
  add_common(check, true);
  check->callback(
      [&] { rc = cmd_check(kind, spec, sub, amb, formation, cap, sub_limit, format); });

  CLI::App* chain = app.add_subcommand("chain", "print a witness chain");
  chain->add_option("predicate", kind, "submodular or kfsub")->required();
  chain->add_option("--sub", sub, "subgroup generators, ';'-separated")->required();
  chain->add_option("--amb", amb, "ambient subgroup generators (default: whole group)");
  chain->add_option("--formation", formation, "N, U, S or U1 (kfsub only)");
  add_common(chain, true);
  chain->callback(
      [&] { rc = cmd_chain(kind, spec, sub, amb, formation, cap, sub_limit, format); });

  CLI::App* res = app.add_subcommand("residual", "formation residual of a subgroup");
  res->add_option("--sub", sub, "subgroup generators (default: whole group)");
  res->add_option("--formation", formation, "N, U, S or U1")->required();
  add_common(res, true);
  res->callback([&] { rc = cmd_residual(spec, sub, formation, cap, sub_limit, format); });

  RunOptions opt;
  std::string catalog_path, out_path;
  std::vector<std::string> only_groups;
  CLI::App* verify = app.add_subcommand("verify", "run the statement corpus");
  verify->add_option("--seed", opt.seed, "quantifier sampling seed");
  verify->add_option("--cap", opt.order_cap, "group order cap");
  verify->add_option("--sub-limit", opt.subgroup_limit, "subgroup count limit");
  verify->add_option("--budget", opt.pair_budget, "statement quantifier budget");
  verify->add_option("--statements", opt.statements, "statement ids or prefixes");
  verify->add_option("--formations", opt.formations, "formation names to quantify over");
  verify->add_option("--jobs", opt.jobs, "worker threads (0 = hardware)");
  verify->add_option("--catalog", catalog_path, "catalog file (default: built-in)");
  verify->add_option("--groups", only_groups, "restrict to these catalog group names");
  verify->add_option("--out", out_path, "write the JSON report to a file");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->callback(
      [&] { rc = cmd_verify(opt, catalog_path, only_groups, out_path, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const grplat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
