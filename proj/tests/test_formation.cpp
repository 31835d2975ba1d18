#include <string>
#include <vector>

#include "doctest.h"
#include "grplat/arith.hpp"
#include "grplat/formation.hpp"
#include "grplat/group.hpp"
#include "grplat/lattice.hpp"
#include "grplat/quotient.hpp"
#include "oracles.hpp"

using grplat::Error;
using grplat::Formation;
using grplat::FormationRegistry;
using grplat::FormationTag;
using grplat::Group;

TEST_CASE("solvability") {
  for (const char* name : {"C1", "S3", "D8", "Q8", "A4", "S4", "C12", "F20", "F7"})
    CHECK(grplat::is_solvable(*oracle::load_group(name)));
  for (const char* name : {"A5", "S5", "C3xA5"})
    CHECK_FALSE(grplat::is_solvable(*oracle::load_group(name)));
}

TEST_CASE("nilpotence, two routes") {
  for (const char* name : {"C1", "C6", "D8", "Q8", "C12"})
    CHECK(grplat::is_nilpotent(*oracle::load_group(name)));
  for (const char* name : {"S3", "A4", "S4", "D10", "F20", "F7", "A5"})
    CHECK_FALSE(grplat::is_nilpotent(*oracle::load_group(name)));

  // lower-central route vs one-subgroup-per-Sylow-order route
  for (const char* name : {"S4", "F7", "D8", "C12", "A4", "F20"}) {
    CAPTURE(name);
    auto lat = oracle::load_lattice(name);
    for (int h = 0; h < lat->size(); ++h)
      CHECK(grplat::is_nilpotent_subset(lat->group(), lat->members(h)) ==
            oracle::nilpotent_by_sylow_count(*lat, h));
  }
}

TEST_CASE("supersolvability") {
  for (const char* name : {"C1", "S3", "D8", "Q8", "D10", "C12", "F20", "F7"})
    CHECK(grplat::is_supersolvable(*oracle::load_group(name)));
  for (const char* name : {"A4", "S4", "A5", "S5", "C3xA5"})
    CHECK_FALSE(grplat::is_supersolvable(*oracle::load_group(name)));
}

TEST_CASE("square-free-exponent supersolvable class") {
  for (const char* name : {"C1", "C6", "S3", "D10", "F7"})
    CHECK(grplat::is_member(*oracle::load_group(name), FormationTag::U1));
  // supersolvable but with a squared prime in the exponent
  for (const char* name : {"C4", "D8", "Q8", "C12", "F20"})
    CHECK_FALSE(grplat::is_member(*oracle::load_group(name), FormationTag::U1));
}

TEST_CASE("class containments on the corpus") {
  for (const auto& e : grplat::default_catalog()) {
    CAPTURE(e.name);
    auto g = oracle::load_group(e.name);
    if (grplat::is_nilpotent(*g)) CHECK(grplat::is_supersolvable(*g));
    if (grplat::is_supersolvable(*g)) CHECK(grplat::is_solvable(*g));
    if (grplat::is_member(*g, FormationTag::U1)) {
      CHECK(grplat::is_supersolvable(*g));
      CHECK(grplat::is_square_free(grplat::exponent(*g)));
    }
  }
}

TEST_CASE("derived series of the symmetric group on four points") {
  auto lat = oracle::load_lattice("S4");
  auto series = grplat::derived_series_subset(lat->group(),
                                              grplat::full_element_set(lat->group()));
  REQUIRE(series.size() == 4);
  CHECK(series[0].count() == 24);
  CHECK(series[1].count() == 12);
  CHECK(series[2].count() == 4);
  CHECK(series[3].count() == 1);
}

TEST_CASE("subset variants on proper subgroups") {
  auto s5 = oracle::load_lattice("S5");
  int a5 = -1;
  for (int i = 0; i < s5->size(); ++i)
    if (s5->order_of(i) == 60) a5 = i;
  REQUIRE(a5 >= 0);
  CHECK_FALSE(grplat::is_solvable_subset(s5->group(), s5->members(a5)));

  auto s4 = oracle::load_lattice("S4");
  CHECK(grplat::is_solvable_subset(s4->group(), s4->members(s4->sylow_subgroup(2))));
}

TEST_CASE("registry built-ins") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  CHECK(reg.builtin_names() == std::vector<std::string>{"N", "U", "S", "U1"});
  for (const auto& name : reg.builtin_names()) {
    CHECK(reg.get(name).builtin);
    CHECK(reg.get(name).subgroup_closed);
    CHECK(reg.get(name).solvable);
  }
  CHECK(reg.get(FormationTag::Nilpotent).name == "N");
  CHECK(reg.find("nope") == nullptr);
  CHECK_THROWS_AS(reg.get("nope"), Error);

  CHECK(grplat::tag_of("U1") == FormationTag::U1);
  CHECK(grplat::name_of(FormationTag::Solvable) == "S");
  CHECK_THROWS_AS(grplat::tag_of("bogus"), Error);
}

TEST_CASE("registering user predicates") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  Formation odd;
  odd.name = "Odd";
  odd.member = [](const Group& g) { return g.order() % 2 == 1; };
  odd.builtin = true;  // must be forced off
  reg.register_formation(odd);
  CHECK_FALSE(reg.get("Odd").builtin);
  CHECK(reg.all().size() == 5);
  CHECK_THROWS_AS(reg.register_formation(odd), Error);

  Formation unnamed;
  unnamed.member = odd.member;
  CHECK_THROWS_AS(reg.register_formation(unnamed), Error);
}

TEST_CASE("residuals of the symmetric group on four points") {
  auto lat = oracle::load_lattice("S4");
  FormationRegistry reg = FormationRegistry::with_builtins();
  int full = lat->full();
  CHECK(lat->order_of(grplat::residual(*lat, full, reg.get("N"))) == 12);
  CHECK(lat->order_of(grplat::residual(*lat, full, reg.get("U"))) == 4);
  CHECK(lat->order_of(grplat::residual(*lat, full, reg.get("U1"))) == 4);
  CHECK(lat->order_of(grplat::residual(*lat, full, reg.get("S"))) == 1);
}

TEST_CASE("residual facts across groups") {
  FormationRegistry reg = FormationRegistry::with_builtins();

  auto s3 = oracle::load_lattice("S3");
  CHECK(grplat::residual(*s3, s3->full(), reg.get("N")) == s3->sylow_subgroup(3));
  CHECK(grplat::residual(*s3, s3->full(), reg.get("U")) == s3->trivial());

  auto a5 = oracle::load_lattice("A5");
  for (const char* f : {"N", "U", "S", "U1"})
    CHECK(grplat::residual(*a5, a5->full(), reg.get(f)) == a5->full());

  auto f7 = oracle::load_lattice("F7");
  CHECK(grplat::residual(*f7, f7->full(), reg.get("U1")) == f7->trivial());
  CHECK(f7->order_of(grplat::residual(*f7, f7->full(), reg.get("N"))) == 7);
}

TEST_CASE("residual definition holds pointwise") {
  // smallest normal subgroup with quotient in the class
  auto lat = oracle::load_lattice("S4");
  FormationRegistry reg = FormationRegistry::with_builtins();
  grplat::ResidualCache cache;
  for (const char* fname : {"N", "U", "S", "U1"}) {
    const Formation& f = reg.get(fname);
    for (int k = 0; k < lat->size(); ++k) {
      int r = grplat::residual(*lat, k, f, &cache);
      CHECK(lat->is_normal_in(r, k));
      Group rq = grplat::coset_action_quotient(lat->group(), lat->members(k),
                                               lat->members(r));
      CHECK(f.member(rq));
      for (int n = 0; n < lat->size(); ++n) {
        if (!lat->contains(n, k) || !lat->is_normal_in(n, k)) continue;
        Group nq = grplat::coset_action_quotient(lat->group(), lat->members(k),
                                                 lat->members(n));
        if (f.member(nq)) CHECK(lat->contains(r, n));
      }
    }
  }
}

TEST_CASE("residual monotonicity along class containment") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  for (const auto& e : grplat::default_catalog()) {
    CAPTURE(e.name);
    auto lat = oracle::load_lattice(e.name);
    grplat::ResidualCache cache;
    for (int k = 0; k < lat->size(); ++k) {
      int rs = grplat::residual(*lat, k, reg.get("S"), &cache);
      int ru = grplat::residual(*lat, k, reg.get("U"), &cache);
      int rn = grplat::residual(*lat, k, reg.get("N"), &cache);
      CHECK(lat->contains(rs, ru));
      CHECK(lat->contains(ru, rn));
    }
  }
}

TEST_CASE("a non-formation predicate is caught by the residual cross-check") {
  FormationRegistry reg = FormationRegistry::with_builtins();
  Formation cyc;
  cyc.name = "Cyc";
  cyc.member = [](const Group& g) {
    for (std::size_t i = 0; i < g.order(); ++i)
      if (g.order_of(static_cast<int>(i)) == g.order()) return true;
    return false;
  };
  reg.register_formation(cyc);
  auto lat = oracle::load_lattice("S4");
  int v4 = oracle::sub_by_gens(*lat, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK_THROWS_WITH_AS(grplat::residual(*lat, v4, reg.get("Cyc")),
                       doctest::Contains("not a formation"), Error);
}

TEST_CASE("radical and Fitting subgroups") {
  auto s4 = oracle::load_lattice("S4");
  CHECK(grplat::solvable_radical(*s4) == s4->full());
  CHECK(s4->order_of(grplat::fitting_subgroup(*s4)) == 4);

  auto s3 = oracle::load_lattice("S3");
  CHECK(s3->order_of(grplat::fitting_subgroup(*s3)) == 3);

  auto a5 = oracle::load_lattice("A5");
  CHECK(grplat::solvable_radical(*a5) == a5->trivial());
  CHECK(grplat::fitting_subgroup(*a5) == a5->trivial());

  auto big = oracle::load_lattice("C3xA5");
  CHECK(big->order_of(grplat::solvable_radical(*big)) == 3);

  auto s5 = oracle::load_lattice("S5");
  CHECK(grplat::solvable_radical(*s5) == s5->trivial());
}
