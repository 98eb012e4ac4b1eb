#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdual/orbit.hpp"

using namespace sdual;

TEST_CASE("parity validity") {
  CHECK(is_symplectic(Partition{3, 3, 2}));
  CHECK_FALSE(is_symplectic(Partition{3, 2, 1}));
  CHECK(is_orthogonal(Partition{2, 2, 1}));
  CHECK_FALSE(is_orthogonal(Partition{4, 2, 2}));
  CHECK(is_symplectic(Partition{}));
  CHECK(is_orthogonal(Partition{}));
}

TEST_CASE("delta") {
  CHECK(delta_values(GroupKind::Sp, Partition{4, 2, 2, 1, 1}) ==
        std::vector<Int>{4, 2});
  CHECK(delta_values(GroupKind::SO, Partition{3, 3, 1}) ==
        std::vector<Int>{3, 1});
  CHECK(delta_values(GroupKind::SO, Partition{2, 2}).empty());
  CHECK_THROWS_AS(delta_values(GroupKind::Sp, Partition{3, 2, 1}), DomainError);
}

TEST_CASE("closure order") {
  CHECK(closure_leq(GroupKind::SO, Partition{2, 2, 1, 1}, Partition{3, 3}));
  CHECK(closure_leq(GroupKind::SO, Partition{3, 3}, Partition{3, 3}));
  CHECK(closure_leq(GroupKind::SO, Partition{1, 1, 1, 1, 1, 1}, Partition{3, 3}));
  CHECK_THROWS_AS(closure_leq(GroupKind::Sp, Partition{2}, Partition{2, 2}),
                  DomainError);
}

TEST_CASE("enumerate counts") {
  CHECK(enumerate_marked(GroupKind::Sp, 4).size() == 7);
  CHECK(enumerate_marked(GroupKind::Sp, 0).size() == 1);
  CHECK(enumerate_marked(GroupKind::SO, 3).size() == 2);
}

TEST_CASE("SO sign-class counts and degenerate doubling, N <= 12") {
  for (Int n = 1; n <= 12; ++n) {
    Int expected = 0;
    for (const auto& l : partitions_of(n)) {
      if (!is_orthogonal(l)) continue;
      auto d = delta_values(GroupKind::SO, l);
      expected += d.empty() ? 2 : (Int{1} << (d.size() - 1));
    }
    CHECK(enumerate_marked(GroupKind::SO, n).size() ==
          static_cast<size_t>(expected));
  }
}

TEST_CASE("canonical representative is enforced") {
  CHECK_THROWS_AS(MarkedPartition(GroupKind::SO, Partition{3, 1},
                                  std::map<Int, int>{{3, -1}, {1, 1}}),
                  DomainError);
  CHECK_THROWS_AS(MarkedPartition(GroupKind::SO, Partition{2, 2},
                                  std::map<Int, int>{}),
                  DomainError);
  CHECK_THROWS_AS(MarkedPartition(GroupKind::Sp, Partition{2},
                                  std::map<Int, int>{}),
                  DomainError);
  CHECK_NOTHROW(MarkedPartition(GroupKind::SO, Partition{2, 2},
                                std::map<Int, int>{}, DegTag::Minus));
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
  auto a = enumerate_marked(GroupKind::Sp, 8);
  auto b = enumerate_marked(GroupKind::Sp, 8);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) CHECK(a[i] != a[j]);
}
