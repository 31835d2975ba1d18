#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "grplat/arith.hpp"
#include "grplat/permutation.hpp"

namespace oracle {

using grplat::CatalogEntry;
using grplat::ElementSet;
using grplat::Formation;
using grplat::Group;
using grplat::ResidualCache;
using grplat::SubgroupLattice;

namespace {

std::vector<int> compose_images(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

std::set<std::vector<int>> closure_of_index_seed(const Group& g, std::vector<int> seed) {
  // closure by index arithmetic, then rendered as sorted member-index lists
  std::set<int> have(seed.begin(), seed.end());
  have.insert(g.identity_index());
  std::vector<int> frontier(have.begin(), have.end());
  while (!frontier.empty()) {
    const std::vector<int> snapshot(have.begin(), have.end());
    std::vector<int> next;
    for (int a : frontier) {
      for (int s : snapshot) {
        for (int prod : {g.mul(a, s), g.mul(s, a)}) {
          if (have.insert(prod).second) next.push_back(prod);
        }
      }
    }
    frontier = std::move(next);
  }
  return {std::vector<int>(have.begin(), have.end())};
}

}  // namespace

std::set<std::vector<int>> naive_closure(const std::vector<std::vector<int>>& gens,
                                         int degree) {
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<std::vector<int>> have{id};
  for (const auto& gen : gens) have.insert(gen);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(have.begin(), have.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        if (have.insert(compose_images(a, b)).second) grew = true;
      }
    }
  }
  return have;
}

std::set<std::vector<int>> subgroups_by_subsets(const Group& g) {
  const int n = static_cast<int>(g.order());
  if (n > 16) throw std::runtime_error("subset oracle limited to order 16");
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != g.identity_index()) others.push_back(i);
  std::set<std::vector<int>> found;
  const std::uint64_t masks = 1ull << others.size();
  for (std::uint64_t m = 0; m < masks; ++m) {
    std::vector<int> subset{g.identity_index()};
    for (std::size_t b = 0; b < others.size(); ++b)
      if ((m >> b) & 1u) subset.push_back(others[b]);
    std::sort(subset.begin(), subset.end());
    bool closed = true;
    for (int a : subset) {
      for (int b : subset) {
        if (!std::binary_search(subset.begin(), subset.end(), g.mul(a, b))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) found.insert(subset);
  }
  return found;
}

std::set<std::vector<int>> subgroups_by_generation(const Group& g, int k) {
  const int n = static_cast<int>(g.order());
  std::set<std::vector<int>> found;
  found.insert(std::vector<int>{g.identity_index()});
  for (int a = 0; a < n; ++a) {
    auto single = closure_of_index_seed(g, {a});
    found.insert(single.begin(), single.end());
    if (k < 2) continue;
    for (int b = a + 1; b < n; ++b) {
      auto pair = closure_of_index_seed(g, {a, b});
      found.insert(pair.begin(), pair.end());
      if (k < 3) continue;
      for (int c = b + 1; c < n; ++c) {
        auto triple = closure_of_index_seed(g, {a, b, c});
        found.insert(triple.begin(), triple.end());
      }
    }
  }
  return found;
}

std::set<std::vector<int>> lattice_member_sets(const SubgroupLattice& lat) {
  std::set<std::vector<int>> out;
  for (int i = 0; i < lat.size(); ++i) out.insert(lat.members(i).members());
  return out;
}

bool subnormal_by_chain_search(const SubgroupLattice& lat, int h, int amb) {
  if (h == amb) return true;
  for (int k = 0; k < lat.size(); ++k) {
    if (k == h || !lat.contains(h, k) || !lat.contains(k, amb)) continue;
    if (lat.is_normal_in(h, k) && subnormal_by_chain_search(lat, k, amb)) return true;
  }
  return false;
}

bool kfsub_by_chain_search(const SubgroupLattice& lat, ResidualCache& rc, int h,
                           int amb, const Formation& f) {
  if (h == amb) return true;
  for (int k = 0; k < lat.size(); ++k) {
    if (k == h || !lat.contains(h, k) || !lat.contains(k, amb)) continue;
    const bool edge =
        lat.is_normal_in(h, k) || lat.contains(grplat::residual(lat, k, f, &rc), h);
    if (edge && kfsub_by_chain_search(lat, rc, k, amb, f)) return true;
  }
  return false;
}

bool modular_by_definition(const SubgroupLattice& lat, int h, int k) {
  std::vector<int> below = lat.subgroups_below(k);
  for (int x : below) {
    for (int z : below) {
      if (!lat.contains(x, z)) continue;
      if (lat.meet(lat.join(x, h), z) != lat.join(x, lat.meet(h, z))) return false;
    }
  }
  for (int y : below) {
    for (int z : below) {
      if (!lat.contains(h, z)) continue;
      if (lat.meet(lat.join(y, h), z) != lat.join(lat.meet(y, z), h)) return false;
    }
  }
  return true;
}

namespace {

bool submodular_search(const SubgroupLattice& lat,
                       const std::vector<std::vector<bool>>& modular, int h, int amb) {
  if (h == amb) return true;
  for (int k = 0; k < lat.size(); ++k) {
    if (k == h || !lat.contains(h, k) || !lat.contains(k, amb)) continue;
    if (modular[h][k] && submodular_search(lat, modular, k, amb)) return true;
  }
  return false;
}

}  // namespace

bool submodular_by_chain_search(const SubgroupLattice& lat, int h, int amb) {
  const int n = lat.size();
  static std::map<const SubgroupLattice*, std::vector<std::vector<bool>>> cache;
  auto it = cache.find(&lat);
  if (it == cache.end()) {
    std::vector<std::vector<bool>> modular(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (lat.contains(a, b)) modular[a][b] = modular_by_definition(lat, a, b);
    it = cache.emplace(&lat, std::move(modular)).first;
  }
  return submodular_search(lat, it->second, h, amb);
}

bool nilpotent_by_sylow_count(const SubgroupLattice& lat, int h) {
  const std::size_t order = lat.order_of(h);
  for (std::uint64_t p : grplat::prime_divisors_of(order)) {
    const std::uint64_t part = grplat::p_part(order, p);
    int count = 0;
    for (int s = 0; s < lat.size(); ++s)
      if (lat.order_of(s) == part && lat.contains(s, h)) ++count;
    if (count != 1) return false;
  }
  return true;
}

const CatalogEntry& entry_of(const std::string& name) {
  for (const CatalogEntry& e : grplat::default_catalog())
    if (e.name == name) return e;
  throw std::runtime_error("no catalog entry named " + name);
}

std::shared_ptr<const Group> load_group(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const Group>> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, std::make_shared<Group>(grplat::realize(entry_of(name)))).first;
  return it->second;
}

std::shared_ptr<const SubgroupLattice> load_lattice(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const SubgroupLattice>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    auto lat = std::make_shared<SubgroupLattice>(SubgroupLattice::build(load_group(name)));
    it = cache.emplace(name, std::move(lat)).first;
  }
  return it->second;
}

int sub_by_gens(const SubgroupLattice& lat, const std::vector<std::string>& gens) {
  std::vector<int> idxs;
  for (const std::string& s : gens) {
    int e = lat.group().index_of(grplat::parse_permutation(s, lat.group().degree()));
    if (e < 0) throw std::runtime_error("generator outside the group: " + s);
    idxs.push_back(e);
  }
  return lat.subgroup_generated_by(idxs);
}

}  // namespace oracle
