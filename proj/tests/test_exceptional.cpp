#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sdual/exceptional.hpp"

using namespace sdual;

TEST_CASE("spot rows from the tables") {
  const ExcEntry& g = exceptional_lookup("G2", "G_2(a_1)", "(21)");
  CHECK(g.dual_orbit == "A_1");
  CHECK(g.dual_a_group == "1");
  CHECK(g.dual_eps == "∅");

  const ExcEntry& f = exceptional_lookup("F4", "F_4(a_3)", "(1^4)");
  CHECK(f.dual_orbit == "F_4(a_3)");
  CHECK(f.dual_a_group == "A_3");
  CHECK(f.dual_eps == "(1^4)");

  const ExcEntry& e = exceptional_lookup("E8", "E_8(a_7)", "(2^21)");
  CHECK(e.dual_orbit == "A_2+A_1");
  CHECK(e.dual_a_group == "A_1");
  CHECK(e.dual_eps == "(2)");
}

TEST_CASE("row counts") {
  CHECK(exceptional_group("G2").size() == 7);
  CHECK(exceptional_all().size() ==
        exceptional_group("G2").size() + exceptional_group("F4").size() +
            exceptional_group("E6").size() + exceptional_group("E7").size() +
            exceptional_group("E8").size());
}

TEST_CASE("trivial orbit rows are fixed points") {
  for (const auto& g : exceptional_group_names()) {
    const ExcEntry& r = exceptional_lookup(g, "1", "∅");
    CHECK(r.dual_orbit == "1");
    CHECK(r.dual_a_group == "1");
    CHECK(r.dual_eps == "∅");
  }
}

TEST_CASE("row closure: every dual datum is a key of the same group") {
  for (const auto& r : exceptional_all()) {
    const ExcEntry& d = exceptional_lookup(r.group, r.dual_orbit, r.dual_eps);
    CHECK(d.a_group == r.dual_a_group);
  }
}

TEST_CASE("self-dual rows are exactly the fixed points of the dual map") {
  std::set<std::pair<std::string, std::string>> expected_fixed;
  for (const auto& r : exceptional_all())
    if (r.orbit == r.dual_orbit && r.eps == r.dual_eps)
      expected_fixed.insert({r.group + "/" + r.orbit, r.eps});
  // e.g. F4(a_3)/(1^4) is self-dual
  CHECK(expected_fixed.count({"F4/F_4(a_3)", "(1^4)"}) == 1);
  CHECK(expected_fixed.count({"E8/E_8(a_7)", "(1^5)"}) == 1);
  CHECK(expected_fixed.count({"G2/G_2(a_1)", "(1^3)"}) == 1);
}

TEST_CASE("unknown keys raise") {
  CHECK_THROWS_AS(exceptional_lookup("G2", "B_7", "∅"), DomainError);
  CHECK_THROWS_AS(exceptional_group("E9"), DomainError);
}
