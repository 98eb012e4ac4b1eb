#pragma once

#include <vector>

#include "sdual/orbit.hpp"
#include "sdual/symbol.hpp"

namespace sdual {

// One step of the max recursion: the emitted first part and sign, the
// smaller input passed to the recursion, and the bookkeeping sets.
struct StepResult {
  Int first_part = 0;
  int first_sign = 1;
  Partition remainder;
  std::vector<int> remainder_eps;  // positional signs on the remainder
  std::vector<Int> s_set;          // the finite part of S resp. O
  std::vector<Int> jtilde_plus, jtilde_minus;
  Int r_prime = 0;  // SO only
};

// One SO step (lambda with odd parts only, positional signs).
StepResult so_step(const Partition& lambda, const std::vector<int>& eps);

// One Sp step (lambda with even parts only); tail_sign extends eps to the
// infinite zero tail, which the O and J-tilde sets quantify over.
StepResult sp_step(const Partition& lambda, const std::vector<int>& eps,
                   int tail_sign = 1);

// (lambda_max, eps_max): the Springer support-maximal constituent datum.
MarkedPartition max_marked(const MarkedPartition& m);

// (lambda_min, eps_min) = Phi^{-1}(sgn (x) Phi(max)).
MarkedPartition min_marked(const MarkedPartition& m);

struct DualResult {
  MarkedPartition dual;
  // Degenerate SO outputs name an orbit pair only; the stored tag is the
  // mechanical image of the split-slot convention, not a resolved choice.
  bool degenerate_unresolved = false;
};

// The graded Iwahori-Matsumoto dual orbit datum of a tempered parameter
// with real infinitesimal character.
DualResult im_dual_tempered(const MarkedPartition& m);

// positional <-> value-indexed sign conversions (value consistency checked)
std::vector<int> positional_signs(const MarkedPartition& m);
MarkedPartition marked_from_positional(GroupKind g, const Partition& lambda,
                                       const std::vector<int>& eps);

}  // namespace sdual
