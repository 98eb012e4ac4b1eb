#pragma once

#include <vector>

#include "sdual/poly.hpp"
#include "sdual/symbol.hpp"

namespace sdual {

enum class WeylType { A, B, D };

// Conjugacy class of S_n / W(B_n) / W(D_n): positive and negative cycle
// types, a +/- discriminator for the split W(D) classes (neg empty, pos all
// even), the class size, and det(1 - t w) on the natural n-dim module.
struct WClass {
  Partition pos, neg;
  int split = 0;
  Int size = 0;
  PolyZ char_poly;
};

// Character label: one partition for type A (beta empty); a bipartition for
// type B; an unordered pair (alpha >=lex beta) with a split index when
// alpha == beta for type D.
struct WCharLabel {
  Partition alpha, beta;
  int split = 0;
  bool operator==(const WCharLabel& o) const {
    return alpha == o.alpha && beta == o.beta && split == o.split;
  }
};

struct CharTable {
  WeylType type = WeylType::A;
  Int rank = 0;
  Int order = 1;
  std::vector<Int> degrees;  // degrees of basic invariants on C^n
  std::vector<WClass> classes;
  std::vector<WCharLabel> chars;
  std::vector<std::vector<Int>> values;  // [char][class]

  Int char_index(const WCharLabel& l) const;
  Int dim(Int char_idx) const;  // value on the identity class
};

// Cached, validated tables (sum of squared dims, column orthogonality).
// Rank bounds: A and B up to 6, D up to 4.
const CharTable& char_table(WeylType type, Int rank);

// Character values by Murnaghan-Nakayama, exposed for tests.
Int sn_char_value(const Partition& lambda, const Partition& cls);
Int wb_char_value(const Partition& alpha, const Partition& beta,
                  const Partition& pos, const Partition& neg);

}  // namespace sdual
