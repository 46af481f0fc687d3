#include "doctest.h"

#include <algorithm>

#include "subcount/errors.hpp"
#include "subcount/group.hpp"

using namespace subcount;

TEST_CASE("cyclic groups: orders and element orders") {
  Group z1 = make_cyclic(1);
  CHECK(z1.order() == 1);
  Group z12 = make_cyclic(12);
  CHECK(z12.order() == 12);
  CHECK(z12.element_order(1) == 12);
  CHECK(z12.element_order(2) == 6);
  CHECK(z12.element_order(6) == 2);
  CHECK(z12.is_abelian());
  CHECK(z12.is_associative());
  CHECK(z12.inv(5) == 7);
}

TEST_CASE("direct product layout and commutativity") {
  Group g = direct_product(make_cyclic(4), make_cyclic(3));
  CHECK(g.order() == 12);
  CHECK(g.is_abelian());
  // (1,1) has index 1*3+1 = 4 and order lcm(4,3) = 12
  CHECK(g.element_order(4) == 12);
  Group h = direct_product(make_cyclic(2), make_cyclic(2));
  CHECK(h.order() == 4);
  for (int x = 1; x < 4; ++x) CHECK(h.element_order(x) == 2);
}

TEST_CASE("metacyclic: quaternion group Q8") {
  // Q8 as Z4.Z2 with inverting action and twist t=2: x^4=e, y^2=x^2,
  // yxy^-1 = x^-1.  Exactly one element of order 2.
  Group q8 = metacyclic(4, 2, 3, 2);
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  int involutions = 0;
  for (int x = 1; x < 8; ++x)
    if (q8.element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);
  CHECK(q8.is_associative());
}

TEST_CASE("metacyclic: rejects inconsistent presentations") {
  CHECK_THROWS_AS(metacyclic(4, 2, 2, 0), presentation_error);  // gcd(k,n)!=1
  CHECK_THROWS_AS(metacyclic(5, 2, 2, 0), presentation_error);  // k^m != 1
  CHECK_THROWS_AS(metacyclic(4, 2, 3, 1), presentation_error);  // t(k-1) != 0
  CHECK_THROWS_AS(metacyclic(100, 100, 1, 0, 2048), size_error);
}

TEST_CASE("metacyclic: Frobenius group of order 20") {
  Group f20 = metacyclic(5, 4, 2, 0);
  CHECK(f20.order() == 20);
  CHECK_FALSE(f20.is_abelian());
  CHECK(f20.element_order(1) == 4);  // the y generator at (0,1)
  CHECK(f20.element_order(f20.generators()[0]) == 5);
}

TEST_CASE("dihedral and dicyclic families") {
  Group d8 = dihedral(8);
  CHECK(d8.order() == 8);
  CHECK_FALSE(d8.is_abelian());
  int involutions = 0;
  for (int x = 1; x < 8; ++x)
    if (d8.element_order(x) == 2) ++involutions;
  CHECK(involutions == 5);

  Group dic12 = dicyclic(12);
  CHECK(dic12.order() == 12);
  CHECK_FALSE(dic12.is_abelian());
  involutions = 0;
  for (int x = 1; x < 12; ++x)
    if (dic12.element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);

  CHECK_THROWS_AS(dihedral(7), presentation_error);
  CHECK_THROWS_AS(dicyclic(10), presentation_error);
}

TEST_CASE("modular maximal-cyclic group M16") {
  Group m16 = modular_maximal_cyclic(2, 4);
  CHECK(m16.order() == 16);
  CHECK_FALSE(m16.is_abelian());
  // M16 has a cyclic subgroup of order 8
  bool has8 = false;
  for (int x = 1; x < 16; ++x) has8 = has8 || m16.element_order(x) == 8;
  CHECK(has8);
  CHECK_THROWS_AS(modular_maximal_cyclic(2, 2), presentation_error);
}

TEST_CASE("permutation closure: S3 and A4") {
  Group s3 = symmetric3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  Group a4 = alternating(4);
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.is_abelian());
  // A4 has no element of order 6
  for (int x = 0; x < 12; ++x) CHECK(a4.element_order(x) != 6);
  CHECK_THROWS_AS(from_permutations(3, {{0, 0, 1}}), generator_error);
}

TEST_CASE("permutation closure: A5 and its element orders") {
  Group a5 = alternating(5);
  CHECK(a5.order() == 60);
  int order5 = 0;
  for (int x = 0; x < 60; ++x)
    if (a5.element_order(x) == 5) ++order5;
  CHECK(order5 == 24);
}

TEST_CASE("matrix closure: SL(2,3) and the Heisenberg group") {
  Group sl23 = special_linear_2_3();
  CHECK(sl23.order() == 24);
  CHECK_FALSE(sl23.is_abelian());
  Group h3 = heisenberg(3);
  CHECK(h3.order() == 27);
  CHECK_FALSE(h3.is_abelian());
  // exponent 3: every non-identity element has order 3
  for (int x = 1; x < 27; ++x) CHECK(h3.element_order(x) == 3);
  CHECK_THROWS_AS(from_matrices(4, 2, {{1, 0, 0, 1}}), generator_error);
  CHECK_THROWS_AS(from_matrices(3, 2, {{1, 1, 1, 1}}), generator_error);
}

TEST_CASE("group constructor rejects broken tables") {
  // 2x2 table that is not a Latin square
  CHECK_THROWS_AS(Group(2, {0, 1, 1, 1}, "bad"), presentation_error);
  // identity not at index 0
  CHECK_THROWS_AS(Group(2, {1, 0, 0, 1}, "bad"), presentation_error);
  // Latin square (quasigroup) that is not associative: 5x5 with 0 as
  // two-sided identity but a*(a*b) != (a*a)*b somewhere
  std::vector<std::uint16_t> loop = {
      0, 1, 2, 3, 4,
      1, 0, 3, 4, 2,
      2, 4, 0, 1, 3,
      3, 2, 4, 0, 1,
      4, 3, 1, 2, 0,
  };
  CHECK_THROWS_AS(Group(5, loop, "loop5"), presentation_error);
}

TEST_CASE("factored order reflects the group order") {
  Group g = metacyclic(9, 3, 4, 0);
  auto f = g.factored_order();
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == 3);
  CHECK(f.factors[0].second == 3);
}
