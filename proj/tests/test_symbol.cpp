#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "sdual/symbol.hpp"

using namespace sdual;

namespace {

MarkedPartition sp(std::initializer_list<Int> l, std::map<Int, int> e) {
  return MarkedPartition(GroupKind::Sp, Partition(l), std::move(e));
}
MarkedPartition so(std::initializer_list<Int> l, std::map<Int, int> e,
                   DegTag t = DegTag::None) {
  return MarkedPartition(GroupKind::SO, Partition(l), std::move(e), t);
}

// Census of Theorems thm:gscSp / thm:gscSO, computed independently of the
// symbol machinery.
Int expected_family_count(GroupKind g, Int size) {
  Int total = 0;
  for (const auto& key : families(g, size)) {
    Int m = family_bipartition_total(key);
    Int ordered = static_cast<Int>(bipartitions_of(m).size());
    if (g == GroupKind::SO && key.defect == 0 && size > 0) {
      Int split = 0;
      for (const auto& b : bipartitions_of(m))
        if (b.alpha == b.beta) ++split;
      // theta-orbits, split slots doubled
      total += (ordered - split) / 2 + 2 * split;
    } else {
      total += ordered;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("marked_symbol defects from the spec") {
  CHECK(marked_symbol(so({1, 1, 1}, {{1, 1}})).defect == 1);
  CHECK(marked_symbol(sp({2}, {{2, -1}})).defect == 1);
  CHECK(marked_symbol(sp({1, 1}, {})).defect == 0);
}

TEST_CASE("bip_symbol matches the defining formulas") {
  Symbol s = bip_symbol({GroupKind::SO, 1, 1}, Bipartition{{}, {}});
  CHECK(s.A == TailSeq::arithmetic(1, 2));
  CHECK(s.B == TailSeq::arithmetic(-1, 2));
  CHECK(s.ordered);

  Symbol u = bip_symbol({GroupKind::SO, 4, 0},
                        Bipartition{Partition{1}, Partition{1}, 1});
  CHECK(u.A == add(Partition{1}, TailSeq::arithmetic(0, 2)));
  CHECK(u.A == u.B);
  CHECK_FALSE(u.ordered);

  Symbol t = bip_symbol({GroupKind::Sp, 2, 1}, Bipartition{{}, {}});
  CHECK(t.A == TailSeq::arithmetic(-2, 2));
  CHECK(t.B == TailSeq::arithmetic(1, 2));
}

TEST_CASE("gsc on Sp(2) and SO(3)") {
  auto [k1, b1] = gsc_forward(sp({2}, {{2, 1}}));
  CHECK(k1.defect == 0);
  CHECK(b1 == Bipartition{Partition{1}, Partition{}});
  auto [k2, b2] = gsc_forward(sp({2}, {{2, -1}}));
  CHECK(k2.defect == 1);
  CHECK(b2 == Bipartition{Partition{}, Partition{}});
  auto [k3, b3] = gsc_forward(sp({1, 1}, {}));
  CHECK(k3.defect == 0);
  CHECK(b3 == Bipartition{Partition{}, Partition{1}});

  auto [k4, b4] = gsc_forward(so({3}, {{3, 1}}));
  CHECK(k4.defect == 1);
  CHECK(b4 == Bipartition{Partition{1}, Partition{}});
  auto [k5, b5] = gsc_forward(so({1, 1, 1}, {{1, 1}}));
  CHECK(k5.defect == 1);
  CHECK(b5 == Bipartition{Partition{}, Partition{1}});

  CHECK(gsc_inverse({GroupKind::Sp, 2, 1}, Bipartition{{}, {}}) ==
        sp({2}, {{2, -1}}));
}

TEST_CASE("degenerate SO orbits land on split slots") {
  auto [kp, bp] = gsc_forward(so({2, 2}, {}, DegTag::Plus));
  auto [km, bm] = gsc_forward(so({2, 2}, {}, DegTag::Minus));
  CHECK(kp.defect == 0);
  CHECK(bp.alpha == bp.beta);
  CHECK(bp.alpha == Partition{1});
  CHECK(bp.split == 1);
  CHECK(bm.split == 2);
  CHECK(gsc_inverse(kp, bp) == so({2, 2}, {}, DegTag::Plus));
  CHECK(gsc_inverse(km, bm) == so({2, 2}, {}, DegTag::Minus));
}

TEST_CASE("round trip and bijectivity for Sp(2n), 2n <= 12") {
  for (Int size = 0; size <= 12; size += 2) {
    auto all = enumerate_marked(GroupKind::Sp, size);
    std::set<std::pair<FamilyKey, Bipartition>> images;
    for (const auto& m : all) {
      auto im = gsc_forward(m);
      CHECK(im.first.size == size);
      CHECK(gsc_inverse(im.first, im.second) == m);
      images.insert(im);
    }
    CHECK(images.size() == all.size());  // injective
    CHECK(static_cast<Int>(all.size()) ==
          expected_family_count(GroupKind::Sp, size));
  }
}

TEST_CASE("round trip and bijectivity for SO(N), N <= 12") {
  for (Int size = 1; size <= 12; ++size) {
    auto all = enumerate_marked(GroupKind::SO, size);
    std::set<std::pair<FamilyKey, Bipartition>> images;
    for (const auto& m : all) {
      auto im = gsc_forward(m);
      CHECK((im.first.defect % 2 + 2) % 2 == size % 2);  // rem:parity
      CHECK(gsc_inverse(im.first, im.second) == m);
      images.insert(im);
    }
    CHECK(images.size() == all.size());
    CHECK(static_cast<Int>(all.size()) ==
          expected_family_count(GroupKind::SO, size));
  }
}

TEST_CASE("surjectivity: every family slot is hit, sizes <= 10") {
  for (GroupKind g : {GroupKind::Sp, GroupKind::SO}) {
    for (Int size = g == GroupKind::Sp ? 0 : 1; size <= 10;
         size += g == GroupKind::Sp ? 2 : 1) {
      std::set<std::pair<FamilyKey, Bipartition>> images;
      for (const auto& m : enumerate_marked(g, size))
        images.insert(gsc_forward(m));
      Int slots = 0;
      for (const auto& key : families(g, size))
        slots += static_cast<Int>(family_members(key).size());
      CHECK(static_cast<Int>(images.size()) == slots);
      for (const auto& key : families(g, size))
        for (const auto& b : family_members(key))
          CHECK(images.count({key, b}) == 1);
    }
  }
}

TEST_CASE("similarity classes are the fibers of lambda") {
  auto all = enumerate_marked(GroupKind::SO, 7);
  for (const auto& a : all)
    for (const auto& b : all)
      CHECK(similar(marked_symbol(a), marked_symbol(b)) ==
            (a.lambda == b.lambda));
  Symbol s = marked_symbol(so({3, 3, 1}, {{3, 1}, {1, 1}}));
  CHECK(similar(s, s));
}

TEST_CASE("sign_twist") {
  FamilyKey key{GroupKind::Sp, 6, 0};
  CHECK(sign_twist(key, Bipartition{Partition{2}, Partition{1}}) ==
        Bipartition{Partition{1}, Partition{1, 1}});
  CHECK(sign_twist(key, Bipartition{{}, {}}) == Bipartition{{}, {}});
  for (Int m = 0; m <= 6; ++m)
    for (const auto& b : bipartitions_of(m)) {
      FamilyKey k2{GroupKind::Sp, 2 * m, 0};
      CHECK(sign_twist(k2, sign_twist(k2, b)) == b);  // involution
    }
  // split slots keep their index
  FamilyKey kd{GroupKind::SO, 4, 0};
  Bipartition bs{Partition{1}, Partition{1}, 2};
  CHECK(sign_twist(kd, bs) == Bipartition{Partition{1}, Partition{1}, 2});
}

TEST_CASE("classical display form") {
  // SO(3), (1,1,1): t=3, k=1; rows ((t+k)/2, (t-k)/2) = (2,1), shift 1.
  Symbol s = marked_symbol(so({1, 1, 1}, {{1, 1}}));
  auto [ra, rb] = to_classical_symbol(s);
  CHECK(ra.size() == 2);
  CHECK(rb.size() == 1);
  CHECK(ra == std::vector<Int>{0, 2});
  CHECK(rb == std::vector<Int>{1});
}
