#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdual/az.hpp"

using namespace sdual;

namespace {

MarkedPartition sp(std::initializer_list<Int> l, std::map<Int, int> e) {
  return MarkedPartition(GroupKind::Sp, Partition(l), std::move(e));
}
MarkedPartition sp_empty() {
  return MarkedPartition(GroupKind::Sp, Partition{}, {});
}

}  // namespace

TEST_CASE("GL-only input gives the ones partition") {
  UnipotentParam p({1, 2}, sp_empty(), sp_empty());
  CHECK(p.n() == 3);
  DualOrbit d = az_dual(p);
  CHECK(d.lambda == Partition{1, 1, 1, 1, 1, 1});
  CHECK(d.merged_eps.empty());
  CHECK(d.conflicts.empty());
  CHECK(d.orbit_only);
}

TEST_CASE("single symplectic block reduces to min_marked") {
  UnipotentParam p({}, sp({2}, {{2, 1}}), sp_empty());
  DualOrbit d = az_dual(p);
  CHECK(d.lambda == Partition{1, 1});  // Steinberg to trivial
  CHECK(d.merged_eps.empty());
  for (Int size = 0; size <= 8; size += 2)
    for (const auto& m : enumerate_marked(GroupKind::Sp, size)) {
      DualOrbit x = az_dual(UnipotentParam({}, m, sp_empty()));
      MarkedPartition mn = min_marked(m);
      CHECK(x.lambda == mn.lambda);
      CHECK(x.merged_eps == mn.eps);
      CHECK(x.conflicts.empty());
    }
}

TEST_CASE("totals and symmetry") {
  UnipotentParam p({1}, sp({2, 2}, {{2, -1}}), sp({4}, {{4, 1}}));
  DualOrbit d = az_dual(p);
  CHECK(d.lambda.total() == 2 * p.n());
  // swapping the blocks relabels the minima but not the orbit
  UnipotentParam q({1}, sp({4}, {{4, 1}}), sp({2, 2}, {{2, -1}}));
  DualOrbit e = az_dual(q);
  CHECK(d.lambda == e.lambda);
  CHECK(d.plus_min == e.minus_min);
  CHECK(d.minus_min == e.plus_min);
}

TEST_CASE("exhaustive totals, plus/minus splits up to n = 4") {
  for (Int np = 0; np <= 4; ++np)
    for (Int nm = 0; np + nm <= 4; ++nm)
      for (const auto& a : enumerate_marked(GroupKind::Sp, 2 * np))
        for (const auto& b : enumerate_marked(GroupKind::Sp, 2 * nm)) {
          UnipotentParam p({}, a, b);
          DualOrbit d = az_dual(p);
          CHECK(d.lambda.total() == 2 * (np + nm));
          CHECK(is_symplectic(d.lambda));
        }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(UnipotentParam({0}, sp_empty(), sp_empty()), DomainError);
  CHECK_THROWS_AS(
      UnipotentParam({}, MarkedPartition(GroupKind::SO, Partition{3}, {{3, 1}}),
                     sp_empty()),
      DomainError);
}
