#include <doctest.h>

#include <set>

#include "rootfold/catalog.hpp"
#include "rootfold/induce.hpp"

using namespace rootfold;

TEST_CASE("induction of A1 along Z/2 gives A1+A1 with the swap") {
  RootDatum a1 = make_named("A1");
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  InducedDatum ind = induce_datum(a1, z2, {0}, {IntMatrix::identity(1)});
  CHECK(ind.result.rank == 2);
  CHECK(type_label(ind.result).str() == "A1+A1");
  CHECK(ind.action.order() == 2);
  // the nontrivial element swaps the two blocks
  const DatumAutomorphism& g = ind.action.elements[ind.gamma_to_element[1]];
  CHECK(g.matrix.at(0, 1) == 1);
  CHECK(g.matrix.at(1, 0) == 1);
  CHECK(induction_quotient_compat(a1, z2, {0}, {IntMatrix::identity(1)}));
}

TEST_CASE("induction along the full group returns the datum with its action") {
  RootDatum a2 = make_named("A2");
  IntMatrix sw = named_action(a2, "swap")[0];
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  InducedDatum ind = induce_datum(a2, z2, {0, 1}, {IntMatrix::identity(2), sw});
  CHECK(ind.result.rank == 2);
  CHECK(ind.result.roots == a2.roots);
  CHECK(ind.action.order() == 2);
  CHECK(induction_quotient_compat(a2, z2, {0, 1}, {IntMatrix::identity(2), sw}));
}

TEST_CASE("induction of A2 along Z/3 gives three cyclically permuted copies") {
  RootDatum a2 = make_named("A2");
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  InducedDatum ind = induce_datum(a2, z3, {0}, {IntMatrix::identity(2)});
  CHECK(ind.result.rank == 6);
  CHECK(type_label(ind.result).str() == "A2+A2+A2");
  CHECK(validate(ind.result).ok);
  CHECK(ind.action.order() == 3);
  // blocks are permuted transitively
  auto orbits = orbits_on_components(ind.result, ind.action);
  CHECK(orbits.size() == 1);
  CHECK(induction_quotient_compat(a2, z3, {0}, {IntMatrix::identity(2)}));
}

TEST_CASE("A2-with-swap induced into Z/2 x Z/2") {
  RootDatum a2 = make_named("A2");
  IntMatrix sw = named_action(a2, "swap")[0];
  FiniteGroup z2z2 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  // gamma1 = first factor {(0,0),(1,0)} = elements {0, 2}
  std::vector<int> gamma1{0, 2};
  std::vector<IntMatrix> action1{IntMatrix::identity(2), sw};
  InducedDatum ind = induce_datum(a2, z2z2, gamma1, action1);
  CHECK(ind.result.rank == 4);
  CHECK(type_label(ind.result).str() == "A2+A2");
  CHECK(ind.action.order() == 4);
  CHECK(induction_quotient_compat(a2, z2z2, gamma1, action1));
}

TEST_CASE("induced components are permuted transitively in blocks of the source components") {
  // d1 with two components stays block-transitive at the component-orbit level
  RootDatum d1 = make_named("A1+A2");
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  InducedDatum ind = induce_datum(d1, z2, {0}, {IntMatrix::identity(3)});
  auto orbits = orbits_on_components(ind.result, ind.action);
  // one orbit per component of d1, each of size [Gamma : Gamma1] = 2
  CHECK(orbits.size() == 2);
  for (const auto& o : orbits) CHECK(o.size() == 2);
  CHECK(induction_quotient_compat(d1, z2, {0}, {IntMatrix::identity(3)}));
}

TEST_CASE("induction rejects non-subgroups and non-homomorphisms") {
  RootDatum a2 = make_named("A2");
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK_THROWS_WITH_AS(induce_datum(a2, z4, {0, 1}, {IntMatrix::identity(2), IntMatrix::identity(2)}),
                       doctest::Contains("NotSubgroup"), Failure);
  IntMatrix sw = named_action(a2, "swap")[0];
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  CHECK_THROWS_WITH_AS(induce_datum(a2, z2, {0, 1}, {sw, sw}), doctest::Contains("BadInput"),
                       Failure);
}

TEST_CASE("induction compatibility across the catalog's diagram actions") {
  for (const char* type : {"A2", "A3", "A4", "D4"}) {
    RootDatum d = make_named(type);
    IntMatrix sw = named_action(d, "swap")[0];
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    CHECK(induction_quotient_compat(d, z2, {0, 1}, {IntMatrix::identity(d.rank), sw}));
    // and induced from the trivial subgroup
    CHECK(induction_quotient_compat(d, z2, {0}, {IntMatrix::identity(d.rank)}));
  }
}
