#pragma once

#include <utility>
#include <vector>

#include "sdual/orbit.hpp"
#include "sdual/partition.hpp"

namespace sdual {

// Ordered pair of partitions labelling an irreducible character of a
// type-B/C/D relative Weyl group.  For the SO defect-0 families the pair is
// unordered; when additionally alpha == beta the slot splits in two and
// `split` (1 or 2) selects the copy.
struct Bipartition {
  Partition alpha, beta;
  int split = 0;

  Bipartition() = default;
  Bipartition(Partition a, Partition b, int s = 0)
      : alpha(std::move(a)), beta(std::move(b)), split(s) {}

  Int total() const { return alpha.total() + beta.total(); }
  bool operator==(const Bipartition& o) const {
    return alpha == o.alpha && beta == o.beta && split == o.split;
  }
  bool operator!=(const Bipartition& o) const { return !(*this == o); }
  bool operator<(const Bipartition& o) const;
  std::string to_string() const;
};

// Cuspidal-support family: group kind, ambient size (2n resp. N), defect k.
struct FamilyKey {
  GroupKind group;
  Int size = 0;
  Int defect = 0;

  bool operator==(const FamilyKey& o) const {
    return group == o.group && size == o.size && defect == o.defect;
  }
  bool operator!=(const FamilyKey& o) const { return !(*this == o); }
  bool operator<(const FamilyKey& o) const;
  std::string to_string() const;
};

// Pair (A,B) of decreasing sequences with arithmetic step-2 tails.
// ordered <=> defect > 0; when unordered, equality ignores the swap.
struct Symbol {
  TailSeq A, B;
  Int defect = 0;
  bool ordered = true;

  bool operator==(const Symbol& o) const;
  bool operator!=(const Symbol& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Similarity: the merged rows agree as multisets.
bool similar(const Symbol& a, const Symbol& b);

Symbol marked_symbol(const MarkedPartition& m);
Symbol bip_symbol(const FamilyKey& key, const Bipartition& b);

// The generalized Springer correspondence and its inverse.
std::pair<FamilyKey, Bipartition> gsc_forward(const MarkedPartition& m);
MarkedPartition gsc_inverse(const FamilyKey& key, const Bipartition& b);

// Tensoring with the sign character: (alpha,beta) -> (t(beta),t(alpha)),
// preserving the split index.
Bipartition sign_twist(const FamilyKey& key, const Bipartition& b);

// Finite two-row display form (increasing rows).
std::pair<std::vector<Int>, std::vector<Int>> to_classical_symbol(
    const Symbol& s);

// enumeration helpers
std::vector<Bipartition> bipartitions_of(Int m);  // ordered pairs
std::vector<FamilyKey> families(GroupKind g, Int size);
Int family_bipartition_total(const FamilyKey& key);
// The family's member list (for SO defect 0: unordered slots, split copies).
std::vector<Bipartition> family_members(const FamilyKey& key);
// Canonical orientation for unordered slots; no-op on ordered families.
Bipartition canonical_member(const FamilyKey& key, Bipartition b);

}  // namespace sdual
