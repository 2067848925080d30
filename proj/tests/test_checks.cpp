#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootfold/checks.hpp"
#include "rootfold/numeric.hpp"

using namespace rootfold;

TEST_CASE("every named check passes") {
  for (const auto& r : run_all_checks()) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("unknown checks are rejected") {
  CHECK_THROWS_WITH_AS(run_named_check("unknown"), doctest::Contains("UnknownCheck"), Failure);
}

TEST_CASE("checks are deterministic") {
  auto a = run_named_check("e6-pairings");
  auto b = run_named_check("e6-pairings");
  CHECK(a.passed == b.passed);
  CHECK(a.detail == b.detail);
}

#include "rootfold/catalog.hpp"
#include "rootfold/json_io.hpp"

TEST_CASE("datum JSON round-trips bit-exactly") {
  for (const char* name : {"A2", "BC2", "E6", "A2+A2"}) {
    RootDatum d = make_named(name);
    json j = to_json(d);
    RootDatum back = datum_from_json(j);
    CHECK(back.rank == d.rank);
    CHECK(back.roots == d.roots);
    CHECK(back.coroots == d.coroots);
    CHECK(to_json(back) == j);
  }
  // the named-type constructor path
  RootDatum e6 = datum_from_json(json{{"type", "E6"}});
  CHECK(e6.num_roots() == 72);
}

TEST_CASE("action JSON round-trips through folding") {
  RootDatum d = make_named("A2");
  json aj;
  aj["generators"] = json::array();
  IntMatrix sw = named_action(d, "swap")[0];
  aj["generators"].push_back(json{{"matrix", to_json(sw)}});
  aj["geometric"] = json::array({0});
  ActionSpec spec = action_from_json(aj);
  REQUIRE(spec.generators.size() == 1);
  CHECK(spec.generators[0] == sw);
  CHECK(spec.has_geometric);
  json fj = folding_to_json(quotient_datum(
      d, close_group(d, spec.generators), positive_system_of_simple(d, bourbaki_base(d))));
  CHECK(fj["quotient_type"] == "BC1");
  RootDatum q = datum_from_json(fj["quotient"]);
  CHECK(validate(q).ok);
}
