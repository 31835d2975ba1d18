#include "grplat/lattice.hpp"

#include <algorithm>
#include <bit>

#include "grplat/arith.hpp"

namespace grplat {

namespace {

constexpr std::size_t row_words(int bits) {
  return (static_cast<std::size_t>(bits) + 63) / 64;
}

void row_set(std::vector<std::uint64_t>& row, int i) {
  row[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63);
}

bool row_test(const std::vector<std::uint64_t>& row, int i) {
  return (row[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}

int first_common(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (std::uint64_t x = a[w] & b[w])
      return static_cast<int>(w * 64) + __builtin_ctzll(x);
  return -1;
}

int last_common(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = a.size(); w-- > 0;)
    if (std::uint64_t x = a[w] & b[w])
      return static_cast<int>(w * 64) + 63 - __builtin_clzll(x);
  return -1;
}

int common_count(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  int n = 0;
  for (std::size_t w = 0; w < a.size(); ++w) n += std::popcount(a[w] & b[w]);
  return n;
}

}  // namespace

ElementSet close_under_mul(const Group& g, ElementSet s) {
  std::vector<int> mem = s.members();
  for (std::size_t i = 0; i < mem.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      int p = g.mul(mem[i], mem[j]);
      if (!s.test(p)) {
        s.set(p);
        mem.push_back(p);
      }
      p = g.mul(mem[j], mem[i]);
      if (!s.test(p)) {
        s.set(p);
        mem.push_back(p);
      }
    }
  }
  return s;
}

SubgroupLattice SubgroupLattice::build(std::shared_ptr<const Group> g,
                                       std::size_t subgroup_limit) {
  SubgroupLattice lat;
  lat.group_ = std::move(g);
  const Group& grp = *lat.group_;
  int n = static_cast<int>(grp.order());

  auto& sets = lat.member_sets_;
  auto& index = lat.index_;
  auto add = [&](const ElementSet& s) {
    if (index.count(s)) return;
    if (sets.size() >= subgroup_limit) throw LimitError("subgroup count exceeds limit");
    index.emplace(s, static_cast<int>(sets.size()));
    sets.push_back(s);
  };

  // cyclic seeds
  for (int e = 0; e < n; ++e) {
    ElementSet s(n);
    int x = grp.identity_index();
    s.set(x);
    do {
      x = grp.mul(x, e);
      s.set(x);
    } while (x != grp.identity_index());
    add(s);
  }

  // close under pairwise join; every subgroup is a join of cyclic subgroups,
  // and the growing double loop eventually visits every final pair
  for (std::size_t i = 1; i < sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet u = sets[i] | sets[j];
      if (index.count(u)) continue;  // one already inside the other
      add(close_under_mul(grp, u));
    }

  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.canon_less(b);
  });
  index.clear();
  int m = static_cast<int>(sets.size());
  lat.orders_.resize(m);
  for (int i = 0; i < m; ++i) {
    index.emplace(sets[i], i);
    lat.orders_[i] = static_cast<std::size_t>(sets[i].count());
  }

  // small generating sets, greedy over ascending element index
  lat.gens_.resize(m);
  for (int i = 0; i < m; ++i) {
    ElementSet span(n);
    span.set(grp.identity_index());
    std::vector<int>& gens = lat.gens_[i];
    sets[i].for_each([&](int x) {
      if (span.test(x) || span.count() == sets[i].count()) return;
      gens.push_back(x);
      span.set(x);
      span = close_under_mul(grp, span);
    });
  }

  // containment bitrows, both directions
  std::size_t words = row_words(m);
  lat.sub_rows_.assign(m, std::vector<std::uint64_t>(words, 0));
  lat.sup_rows_.assign(m, std::vector<std::uint64_t>(words, 0));
  for (int sub = 0; sub < m; ++sub)
    for (int super = sub; super < m; ++super) {
      if (lat.orders_[super] % lat.orders_[sub] != 0) continue;
      if (!sets[sub].subset_of(sets[super])) continue;
      row_set(lat.sub_rows_[super], sub);
      row_set(lat.sup_rows_[sub], super);
    }

  // the join (meet) is the unique minimal (maximal) common neighbour, so with
  // the canonical order it is the first (last) common index
  lat.join_tab_.resize(static_cast<std::size_t>(m) * m);
  lat.meet_tab_.resize(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      int jn = first_common(lat.sup_rows_[a], lat.sup_rows_[b]);
      int mt = last_common(lat.sub_rows_[a], lat.sub_rows_[b]);
      lat.join_tab_[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint32_t>(jn);
      lat.join_tab_[static_cast<std::size_t>(b) * m + a] = static_cast<std::uint32_t>(jn);
      lat.meet_tab_[static_cast<std::size_t>(a) * m + b] = static_cast<std::uint32_t>(mt);
      lat.meet_tab_[static_cast<std::size_t>(b) * m + a] = static_cast<std::uint32_t>(mt);
    }

  // h normal in k iff every generator of k conjugates h into itself
  lat.normal_rows_.assign(m, std::vector<std::uint64_t>(words, 0));
  for (int h = 0; h < m; ++h)
    for (int k = h; k < m; ++k) {
      if (!lat.contains(h, k)) continue;
      bool normal = true;
      for (int gidx : lat.gens_[k]) {
        sets[h].for_each([&](int x) {
          if (normal && !sets[h].test(grp.conj(x, gidx))) normal = false;
        });
        if (!normal) break;
      }
      if (normal) row_set(lat.normal_rows_[h], k);
    }

  return lat;
}

std::vector<std::string> SubgroupLattice::generator_strings(int idx) const {
  std::vector<std::string> out;
  for (int g : gens_[idx]) out.push_back(to_cycle_string(group_->elements()[g]));
  if (out.empty()) out.push_back("()");
  return out;
}

bool SubgroupLattice::is_normal_in(int h, int k) const {
  if (!contains(h, k)) throw Error("normality asked for a non-subgroup pair");
  return row_test(normal_rows_[h], k);
}

int SubgroupLattice::find(const ElementSet& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

int SubgroupLattice::find_or_throw(const ElementSet& s) const {
  int idx = find(s);
  if (idx < 0) throw Error("element set is not a subgroup of this lattice");
  return idx;
}

int SubgroupLattice::conjugate_subgroup(int idx, int g) const {
  ElementSet s(static_cast<int>(group_->order()));
  member_sets_[idx].for_each([&](int x) { s.set(group_->conj(x, g)); });
  return find_or_throw(s);
}

int SubgroupLattice::core(int x, int y) const {
  if (!contains(x, y)) throw Error("core asked for a non-subgroup pair");
  for (int cand = size() - 1; cand >= 0; --cand)
    if (contains(cand, x) && row_test(normal_rows_[cand], y)) return cand;
  return trivial();
}

int SubgroupLattice::normal_closure(int h, int k) const {
  if (!contains(h, k)) throw Error("normal closure asked for a non-subgroup pair");
  for (int cand = h; cand < size(); ++cand)
    if (contains(h, cand) && row_test(normal_rows_[cand], k)) return cand;
  return k;
}

std::vector<int> SubgroupLattice::maximal_subgroups(int amb) const {
  std::vector<int> out;
  for (int mcand = 0; mcand < amb; ++mcand)
    if (contains(mcand, amb) && common_count(sup_rows_[mcand], sub_rows_[amb]) == 2)
      out.push_back(mcand);
  return out;
}

bool SubgroupLattice::is_maximal_in(int mcand, int amb) const {
  if (!contains(mcand, amb)) throw Error("maximality asked for a non-subgroup pair");
  if (mcand == amb) return false;
  return common_count(sup_rows_[mcand], sub_rows_[amb]) == 2;
}

int SubgroupLattice::sylow_subgroup(std::uint64_t p) const {
  std::size_t q = p_part(group_->order(), p);
  for (int i = 0; i < size(); ++i)
    if (orders_[i] == q) return i;
  throw Error("Sylow subgroup missing from lattice");
}

int SubgroupLattice::center() const {
  int n = static_cast<int>(group_->order());
  ElementSet z(n);
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int g : group_->generator_indices())
      if (group_->mul(x, g) != group_->mul(g, x)) {
        central = false;
        break;
      }
    if (central) z.set(x);
  }
  return find_or_throw(z);
}

int SubgroupLattice::centralizer(int x) const {
  int n = static_cast<int>(group_->order());
  ElementSet c(n);
  for (int e = 0; e < n; ++e) {
    bool commutes = true;
    member_sets_[x].for_each([&](int a) {
      if (commutes && group_->mul(e, a) != group_->mul(a, e)) commutes = false;
    });
    if (commutes) c.set(e);
  }
  return find_or_throw(c);
}

std::vector<int> SubgroupLattice::subgroups_below(int amb) const {
  std::vector<int> out;
  for (int i = 0; i <= amb; ++i)
    if (contains(i, amb)) out.push_back(i);
  return out;
}

std::vector<int> SubgroupLattice::normal_subgroups_of(int amb) const {
  std::vector<int> out;
  for (int i = 0; i <= amb; ++i)
    if (contains(i, amb) && row_test(normal_rows_[i], amb)) out.push_back(i);
  return out;
}

int SubgroupLattice::subgroup_generated_by(const std::vector<int>& elem_idxs) const {
  ElementSet s(static_cast<int>(group_->order()));
  s.set(group_->identity_index());
  for (int e : elem_idxs) s.set(e);
  return find_or_throw(close_under_mul(*group_, std::move(s)));
}

std::vector<std::pair<int, int>> SubgroupLattice::cover_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int sub = 0; sub < size(); ++sub)
    for (int super = sub + 1; super < size(); ++super)
      if (contains(sub, super) && common_count(sup_rows_[sub], sub_rows_[super]) == 2)
        out.emplace_back(sub, super);
  return out;
}

}  // namespace grplat
