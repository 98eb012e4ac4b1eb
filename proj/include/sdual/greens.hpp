#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sdual/chartable.hpp"
#include "sdual/duality.hpp"

namespace sdual {

struct FamilyMember {
  Bipartition bip;
  MarkedPartition pair;
};

// Solved Lusztig-Shoji data for one cuspidal-support family: the member
// list, the coinvariant-algebra pairing matrix Omega, and the unique
// solution (P, Lambda) of P Lambda P^t = Omega under the support and
// similarity-block conditions.  All entries are certified to lie in Z[t]
// and the residual is checked to vanish identically.
struct FamilySolve {
  FamilyKey key;
  WeylType wtype = WeylType::B;
  Int wrank = 0;
  std::vector<FamilyMember> members;
  std::vector<Int> block_of;
  std::vector<std::vector<PolyZ>> omega, P, Lambda;

  Int member_index(const Bipartition& b) const;
};

std::pair<WeylType, Int> relative_weyl(const FamilyKey& key);

// Cached per-family solve; throws on rank bound or a failed certificate.
const FamilySolve& solve_family(const FamilyKey& key);

// eq:multgreen at t=1; zero across distinct families.
Int green_mult(const MarkedPartition& fiber, const MarkedPartition& constituent);

// Constituents of the fiber homology of m with their multiplicities.
std::vector<std::pair<MarkedPartition, Int>> green_constituents(
    const MarkedPartition& m);

// All bipartitions reachable from the base set by adding a horizontal
// a-strip across the two rows (eq:pieri).
std::vector<Bipartition> pieri_induce(const std::vector<Bipartition>& base,
                                      Int a);

// For a mixed-parity pair: compares the constituent slot set against the
// Pieri closure of the pure-parity constituents (eq:induction).  Returns a
// description of the discrepancy, or the empty string if consistent (or if
// the input is pure).
std::string pieri_inconsistency(const MarkedPartition& m);

// ---- type A cross-check ----

struct TypeASolve {
  Int n = 0;
  std::vector<Partition> members;
  std::vector<std::vector<PolyZ>> omega, P, Lambda;
};

const TypeASolve& solve_type_a(Int n);

// Charge-statistic Kostka-Foulkes polynomial (independent brute force).
PolyZ kostka_charge(const Partition& lambda, const Partition& mu);

// ---- verification driver ----

struct VerifyReport {
  std::string group;  // "Sp", "SO", "A"
  Int max_size = 0;
  Int families = 0;
  Int pairs = 0;
  std::vector<std::string> issues;
  double seconds = 0.0;
  bool ok() const { return issues.empty(); }
};

// Certifies thm:maxSp/thm:minSp (Sp) resp. thm:maxeven/thm:mineven (SO)
// against the solved Green functions for every pair up to max_size, plus
// the Pieri/induction consistency on mixed-parity inputs.
// threads <= 1 runs the serial reference path; otherwise OpenMP.
VerifyReport verify_theorems(GroupKind g, Int max_size, int threads = 1);

// Type-A certification: solved P equals the charge Kostka matrix and the
// maximal support is the one-row partition, for all n <= max_n.
VerifyReport verify_type_a(Int max_n, int threads = 1);

// Drops the process-global solve caches (benchmarking support).
void clear_green_caches();

}  // namespace sdual
