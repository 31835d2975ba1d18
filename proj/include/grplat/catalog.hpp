#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grplat/group.hpp"

#include "json.hpp"

namespace grplat {

// One corpus group: generators in cycle notation plus metadata.
struct CatalogEntry {
  std::string name;
  int degree = 1;
  std::vector<std::string> generators;
  std::optional<std::uint64_t> expected_order;
  std::vector<std::string> tags;
};

// Parses {"groups": [...]}; throws Error with the entry index on schema or
// cycle-notation problems.  Expected orders are checked at realize() time so
// over-cap entries still load.
std::vector<CatalogEntry> parse_catalog(const nlohmann::json& j);
std::vector<CatalogEntry> load_catalog(const std::string& path);

nlohmann::ordered_json catalog_to_json(const std::vector<CatalogEntry>& entries);

// Entry of degree degA+degB: A's generators fixing B's points plus B's
// generators shifted; realizes to the direct product.
CatalogEntry direct_product(const CatalogEntry& a, const CatalogEntry& b);

// The built-in corpus: cyclic samples, S3..S5, A4, A5, dihedral and
// quaternion order-8 groups, Frobenius groups F20 and F7, C3 x A5, and a
// supersolvable group of non-square-free exponent.
const std::vector<CatalogEntry>& default_catalog();

// Generates the group and validates expected_order when present.
Group realize(const CatalogEntry& e, std::size_t order_cap = kDefaultOrderCap);

}  // namespace grplat
