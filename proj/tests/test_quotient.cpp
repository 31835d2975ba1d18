#include <memory>
#include <vector>

#include "doctest.h"
#include "grplat/group.hpp"
#include "grplat/lattice.hpp"
#include "grplat/permutation.hpp"
#include "grplat/quotient.hpp"
#include "oracles.hpp"

using grplat::ElementSet;
using grplat::Error;
using grplat::full_element_set;
using grplat::Group;
using grplat::QuotientGroup;

TEST_CASE("quotient by the Klein subgroup") {
  auto lat = oracle::load_lattice("S4");
  int v4 = oracle::sub_by_gens(*lat, {"(1 2)(3 4)", "(1 3)(2 4)"});
  QuotientGroup q = grplat::quotient(*lat, v4);
  CHECK(q.quotient().order() == 6);
  CHECK_FALSE(q.quotient().is_abelian());
  CHECK(q.kernel() == lat->members(v4));
}

TEST_CASE("quotient by the alternating subgroup") {
  auto lat = oracle::load_lattice("S4");
  int a4 = oracle::sub_by_gens(*lat, {"(1 2 3)", "(2 3 4)"});
  QuotientGroup q = grplat::quotient(*lat, a4);
  CHECK(q.quotient().order() == 2);
}

TEST_CASE("projection is a homomorphism with the kernel as fiber of identity") {
  auto lat = oracle::load_lattice("S4");
  int v4 = oracle::sub_by_gens(*lat, {"(1 2)(3 4)", "(1 3)(2 4)"});
  QuotientGroup q = grplat::quotient(*lat, v4);
  const Group& g = lat->group();
  const Group& gq = q.quotient();
  for (int a = 0; a < static_cast<int>(g.order()); ++a) {
    CHECK(q.project(a) >= 0);
    for (int b = 0; b < static_cast<int>(g.order()); ++b)
      CHECK(q.project(g.mul(a, b)) == gq.mul(q.project(a), q.project(b)));
  }
  CHECK(q.project(g.identity_index()) == gq.identity_index());
  lat->members(v4).for_each([&](int e) { CHECK(q.project(e) == gq.identity_index()); });
}

TEST_CASE("push and pull of subgroups") {
  auto lat = oracle::load_lattice("S4");
  int v4 = oracle::sub_by_gens(*lat, {"(1 2)(3 4)", "(1 3)(2 4)"});
  int a4 = oracle::sub_by_gens(*lat, {"(1 2 3)", "(2 3 4)"});
  QuotientGroup q = grplat::quotient(*lat, v4);

  ElementSet image = q.push(lat->members(a4));
  CHECK(image.count() == 3);
  CHECK(q.pull(image) == lat->members(a4));

  // push of a subgroup not containing the kernel gives the image of H*kernel
  int c2 = oracle::sub_by_gens(*lat, {"(1 2)"});
  CHECK(q.push(lat->members(c2)).count() == 2);

  ElementSet everything = q.push(full_element_set(lat->group()));
  CHECK(q.pull(everything) == full_element_set(lat->group()));
}

TEST_CASE("subquotients of a proper subgroup") {
  auto lat = oracle::load_lattice("S4");
  int v4 = oracle::sub_by_gens(*lat, {"(1 2)(3 4)", "(1 3)(2 4)"});
  int a4 = oracle::sub_by_gens(*lat, {"(1 2 3)", "(2 3 4)"});
  QuotientGroup q =
      QuotientGroup::build(lat->group_ptr(), lat->members(a4), lat->members(v4));
  CHECK(q.quotient().order() == 3);
  CHECK(q.project(lat->group().index_of(grplat::parse_permutation("(1 2)", 4))) == -1);
}

TEST_CASE("non-normal kernels are rejected") {
  auto lat = oracle::load_lattice("S4");
  int c2 = oracle::sub_by_gens(*lat, {"(1 2)"});
  CHECK_THROWS_AS(grplat::quotient(*lat, c2), Error);
  CHECK_THROWS_AS(QuotientGroup::build(lat->group_ptr(), full_element_set(lat->group()),
                                       lat->members(c2)),
                  Error);
}

TEST_CASE("kernels must lie inside the source") {
  auto lat = oracle::load_lattice("S4");
  int v4 = oracle::sub_by_gens(*lat, {"(1 2)(3 4)", "(1 3)(2 4)"});
  int c3 = oracle::sub_by_gens(*lat, {"(1 2 3)"});
  CHECK_THROWS_AS(
      QuotientGroup::build(lat->group_ptr(), lat->members(c3), lat->members(v4)), Error);
}

TEST_CASE("bare coset action quotient") {
  auto lat = oracle::load_lattice("F7");
  int c7 = lat->sylow_subgroup(7);
  Group q = grplat::coset_action_quotient(lat->group(), full_element_set(lat->group()),
                                          lat->members(c7));
  CHECK(q.order() == 6);
  CHECK(q.is_abelian());
}

TEST_CASE("cosets are ordered by minimal representative") {
  // determinism pin: two identical builds give identical element tables
  auto lat = oracle::load_lattice("S4");
  int a4 = oracle::sub_by_gens(*lat, {"(1 2 3)", "(2 3 4)"});
  QuotientGroup q1 = grplat::quotient(*lat, a4);
  QuotientGroup q2 = grplat::quotient(*lat, a4);
  CHECK(q1.quotient().elements() == q2.quotient().elements());
  for (std::size_t e = 0; e < lat->group().order(); ++e)
    CHECK(q1.project(static_cast<int>(e)) == q2.project(static_cast<int>(e)));
}
