#include "grplat/catalog.hpp"

#include <fstream>

namespace grplat {

std::vector<CatalogEntry> parse_catalog(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("groups") || !j["groups"].is_array())
    throw Error("catalog: expected an object with a \"groups\" array");
  std::vector<CatalogEntry> out;
  int i = 0;
  for (const auto& e : j["groups"]) {
    std::string where = "catalog entry " + std::to_string(i) + ": ";
    try {
      CatalogEntry c;
      c.name = e.at("name").get<std::string>();
      c.degree = e.at("degree").get<int>();
      if (c.degree < 1) throw Error("degree must be positive");
      for (const auto& g : e.at("generators")) {
        c.generators.push_back(g.get<std::string>());
        parse_permutation(c.generators.back(), c.degree);  // validate now
      }
      if (e.contains("expected_order"))
        c.expected_order = e["expected_order"].get<std::uint64_t>();
      if (e.contains("tags"))
        for (const auto& t : e["tags"]) c.tags.push_back(t.get<std::string>());
      out.push_back(std::move(c));
    } catch (const nlohmann::json::exception& ex) {
      throw Error(where + ex.what());
    } catch (const Error& ex) {
      throw Error(where + ex.what());
    }
    ++i;
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw Error("catalog " + path + ": " + ex.what());
  }
  return parse_catalog(j);
}

nlohmann::ordered_json catalog_to_json(const std::vector<CatalogEntry>& entries) {
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (const CatalogEntry& e : entries) {
    nlohmann::ordered_json g;
    g["name"] = e.name;
    g["degree"] = e.degree;
    g["generators"] = e.generators;
    if (e.expected_order) g["expected_order"] = *e.expected_order;
    g["tags"] = e.tags;
    groups.push_back(std::move(g));
  }
  return nlohmann::ordered_json{{"groups", std::move(groups)}};
}

CatalogEntry direct_product(const CatalogEntry& a, const CatalogEntry& b) {
  CatalogEntry c;
  c.name = a.name + "x" + b.name;
  c.degree = a.degree + b.degree;
  for (const std::string& g : a.generators) {
    Permutation p = parse_permutation(g, a.degree);
    std::vector<int> im(c.degree);
    for (int i = 0; i < c.degree; ++i) im[i] = i < a.degree ? p[i] : i;
    c.generators.push_back(to_cycle_string(Permutation(std::move(im))));
  }
  for (const std::string& g : b.generators) {
    Permutation p = parse_permutation(g, b.degree);
    std::vector<int> im(c.degree);
    for (int i = 0; i < c.degree; ++i)
      im[i] = i < a.degree ? i : p[i - a.degree] + a.degree;
    c.generators.push_back(to_cycle_string(Permutation(std::move(im))));
  }
  if (a.expected_order && b.expected_order)
    c.expected_order = *a.expected_order * *b.expected_order;
  c.tags = {"direct-product"};
  return c;
}

const std::vector<CatalogEntry>& default_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto mk = [](std::string name, int degree, std::vector<std::string> gens,
                 std::uint64_t order, std::vector<std::string> tags) {
      CatalogEntry e;
      e.name = std::move(name);
      e.degree = degree;
      e.generators = std::move(gens);
      e.expected_order = order;
      e.tags = std::move(tags);
      return e;
    };
    std::vector<CatalogEntry> v;
    v.push_back(mk("C1", 1, {}, 1, {"cyclic", "abelian"}));
    v.push_back(mk("C2", 2, {"(1 2)"}, 2, {"cyclic", "abelian"}));
    v.push_back(mk("C3", 3, {"(1 2 3)"}, 3, {"cyclic", "abelian"}));
    v.push_back(mk("C4", 4, {"(1 2 3 4)"}, 4, {"cyclic", "abelian"}));
    v.push_back(mk("S3", 3, {"(1 2 3)", "(1 2)"}, 6, {"symmetric", "supersolvable"}));
    v.push_back(mk("C6", 5, {"(1 2)(3 4 5)"}, 6, {"cyclic", "abelian"}));
    v.push_back(mk("C7", 7, {"(1 2 3 4 5 6 7)"}, 7, {"cyclic", "abelian"}));
    v.push_back(mk("D8", 4, {"(1 2 3 4)", "(1 3)"}, 8, {"dihedral", "nilpotent"}));
    v.push_back(mk("Q8", 8, {"(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"}, 8,
                   {"quaternion", "nilpotent"}));
    v.push_back(mk("D10", 5, {"(1 2 3 4 5)", "(2 5)(3 4)"}, 10,
                   {"dihedral", "supersolvable"}));
    v.push_back(mk("A4", 4, {"(1 2 3)", "(2 3 4)"}, 12, {"alternating", "solvable"}));
    v.push_back(mk("C12", 7, {"(1 2 3)(4 5 6 7)"}, 12, {"cyclic", "abelian"}));
    v.push_back(mk("F20", 5, {"(1 2 3 4 5)", "(2 3 5 4)"}, 20, {"frobenius", "solvable"}));
    v.push_back(mk("S4", 4, {"(1 2 3 4)", "(1 2)"}, 24, {"symmetric", "solvable"}));
    v.push_back(mk("F7", 7, {"(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"}, 42,
                   {"frobenius", "supersolvable"}));
    v.push_back(mk("A5", 5, {"(1 2 3)", "(1 2 3 4 5)"}, 60, {"alternating", "simple"}));
    v.push_back(mk("S5", 5, {"(1 2 3 4 5)", "(1 2)"}, 120, {"symmetric"}));
    v.push_back(mk("C3xA5", 8, {"(1 2 3)", "(4 5 6)", "(4 5 6 7 8)"}, 180,
                   {"direct-product"}));
    return v;
  }();
  return entries;
}

Group realize(const CatalogEntry& e, std::size_t order_cap) {
  std::vector<Permutation> gens;
  for (const std::string& g : e.generators)
    gens.push_back(parse_permutation(g, e.degree));
  Group grp = Group::generate(std::move(gens), e.degree, order_cap);
  if (e.expected_order && grp.order() != *e.expected_order)
    throw Error("group " + e.name + ": order " + std::to_string(grp.order()) +
                " does not match expected " + std::to_string(*e.expected_order));
  return grp;
}

}  // namespace grplat
