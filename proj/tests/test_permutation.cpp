#include <vector>

#include "doctest.h"
#include "grplat/permutation.hpp"

using grplat::compose;
using grplat::conjugate;
using grplat::element_order;
using grplat::Error;
using grplat::inverse;
using grplat::parse_permutation;
using grplat::Permutation;
using grplat::to_cycle_string;

TEST_CASE("identity construction and recognition") {
  Permutation id(4);
  CHECK(id.degree() == 4);
  CHECK(id.is_identity());
  CHECK(id.images() == std::vector<int>{0, 1, 2, 3});
  CHECK(to_cycle_string(id) == "()");
}

TEST_CASE("image vector constructor validates bijections") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 3}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{-1, 0}), Error);
  CHECK(Permutation(std::vector<int>{1, 0}).degree() == 2);
}

TEST_CASE("cycle notation parsing") {
  CHECK(parse_permutation("(1 2 3)", 3).images() == std::vector<int>{1, 2, 0});
  CHECK(parse_permutation("(1,2,3)", 3).images() == std::vector<int>{1, 2, 0});
  CHECK(parse_permutation("(1 2)(3 4)", 5).images() == std::vector<int>{1, 0, 3, 2, 4});
  CHECK(parse_permutation("", 3).is_identity());
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK(parse_permutation(" ( 1 2 ) ", 2).images() == std::vector<int>{1, 0});
}

TEST_CASE("cycle notation rejects malformed input") {
  CHECK_THROWS_AS(parse_permutation("(1 8)", 7), Error);
  CHECK_THROWS_AS(parse_permutation("(0 1)", 3), Error);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 3), Error);
  CHECK_THROWS_AS(parse_permutation("(1 1)", 3), Error);
  CHECK_THROWS_AS(parse_permutation("(1 2", 3), Error);
  CHECK_THROWS_AS(parse_permutation("1 2)", 3), Error);
  CHECK_THROWS_AS(parse_permutation("(1 x)", 3), Error);
}

TEST_CASE("composition applies the left factor first") {
  // the orientation every other module relies on
  Permutation p = parse_permutation("(1 2)", 3);
  Permutation q = parse_permutation("(1 3)", 3);
  CHECK(to_cycle_string(compose(p, q)) == "(1 2 3)");
  CHECK(to_cycle_string(compose(q, p)) == "(1 3 2)");
  for (int x = 0; x < 3; ++x) CHECK(compose(p, q)[x] == q[p[x]]);
}

TEST_CASE("inverse and conjugation") {
  Permutation p = parse_permutation("(1 2 3 4)", 4);
  CHECK(compose(p, inverse(p)).is_identity());
  CHECK(compose(inverse(p), p).is_identity());

  // a^g relabels a's points by g
  Permutation a = parse_permutation("(1 2)", 3);
  Permutation g = parse_permutation("(1 3)", 3);
  CHECK(to_cycle_string(conjugate(a, g)) == "(2 3)");
  CHECK(conjugate(a, g) == compose(compose(inverse(g), a), g));
}

TEST_CASE("cycle string round trip") {
  const char* texts[] = {"(1 2)", "(1 2 3)(4 5)", "(2 4 3 7 5 6)", "()"};
  for (const char* t : texts) {
    Permutation p = parse_permutation(t, 7);
    CHECK(parse_permutation(to_cycle_string(p), 7) == p);
  }
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(element_order(Permutation(5)) == 1);
  CHECK(element_order(parse_permutation("(1 2)", 5)) == 2);
  CHECK(element_order(parse_permutation("(1 2)(3 4 5)", 5)) == 6);
  CHECK(element_order(parse_permutation("(1 2 3 4)(5 6 7)(8 9)", 9)) == 12);
}

TEST_CASE("lexicographic order on image sequences") {
  Permutation id(3);
  Permutation t = parse_permutation("(2 3)", 3);
  CHECK(id < t);
  CHECK_FALSE(t < id);
}
