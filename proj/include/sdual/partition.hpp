#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdual {

using Int = long long;

// Bad user input (invalid partition, mismatched sizes, unknown key, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A consistency check inside the library failed.  These indicate a broken
// convention choice, never bad input, and are tested to be unreachable.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Finite weakly decreasing sequence of positive integers.  Zero parts are
// never stored; reading past the end yields 0, and call sites that need the
// infinite zero tail pad explicitly.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts);
  Partition(std::initializer_list<Int> parts)
      : Partition(std::vector<Int>(parts)) {}

  // Builds a partition from an arbitrary bag of nonnegative values.
  static Partition from_multiset(std::vector<Int> values);

  Int length() const { return static_cast<Int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  Int total() const;
  // 1-based access with zero padding.
  Int part(Int i) const;
  const std::vector<Int>& parts() const { return parts_; }

  Partition transpose() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  // Lexicographic order on the parts vector; used only to fix canonical
  // orientations and deterministic output orderings.
  bool lex_less(const Partition& o) const { return parts_ < o.parts_; }

  std::string to_string() const;

 private:
  std::vector<Int> parts_;
};

// Eventually arithmetic decreasing integer sequence: a finite weakly
// decreasing prefix followed by the merge of one or more arithmetic chains
// (start, start-step, start-2*step, ...) sharing a common positive step.
// A single chain models [a,-inf[_s; two-chain instances arise as unions of
// such (the Lambda-sequences of eq:Lambda style constructions).
//
// Canonical form: the prefix carries no trailing entry that coincides with
// the natural upward extension of a chain.  Equality compares represented
// sequences (the steps are brought to a common multiple first).
class TailSeq {
 public:
  TailSeq() : TailSeq({}, {0}, 1) {}
  TailSeq(std::vector<Int> prefix, std::vector<Int> chain_starts, Int step);

  // [a,-inf[_s.
  static TailSeq arithmetic(Int a, Int s) { return TailSeq({}, {a}, s); }

  Int step() const { return step_; }
  const std::vector<Int>& prefix() const { return prefix_; }
  const std::vector<Int>& chain_starts() const { return starts_; }
  Int chain_count() const { return static_cast<Int>(starts_.size()); }
  bool single_chain() const { return starts_.size() == 1; }

  // 1-based term of the represented sequence.
  Int at(Int i) const;
  std::vector<Int> first(Int n) const;

  // For a single chain: the value the chain would take at index 1, i.e.
  // entry_i = virtual_start() - (i-1)*step for indices past the prefix.
  Int virtual_start() const;

  // Same sequence re-expressed with step L (a multiple of step()).
  TailSeq with_step(Int L) const;

  // Splits off the first n terms; returns them and the remaining TailSeq.
  std::pair<std::vector<Int>, TailSeq> split_at(Int n) const;

  bool operator==(const TailSeq& o) const;
  bool operator!=(const TailSeq& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<Int> prefix_;
  std::vector<Int> starts_;  // sorted descending, at least one
  Int step_;
};

// ---- sequence operations (mult, S_c, dominance, union, +) ----

Int multiplicity(const Partition& p, Int r);
Int multiplicity(const TailSeq& t, Int r);

Int partial_sum(const Partition& p, Int c);
Int partial_sum(const TailSeq& t, Int c);

// S_c(a) <= S_c(b) for every c >= 1.  Always decidable for eventually
// arithmetic tails; see the drift analysis in the implementation.
bool dominance_leq(const Partition& a, const Partition& b);
bool dominance_leq(const TailSeq& a, const TailSeq& b);

Partition union_merge(const Partition& a, const Partition& b);
TailSeq union_merge(const TailSeq& a, const TailSeq& b);

Partition add(const Partition& a, const Partition& b);
// Termwise sums against a tail; the TailSeq+TailSeq form requires single
// chains (multi-chain termwise sums are not eventually arithmetic with one
// common step) and throws DomainError otherwise.
TailSeq add(const Partition& a, const TailSeq& b);
TailSeq add(const TailSeq& a, const TailSeq& b);

// eq:Lambda.  Lambda_{A,B;s}(mu,nu) = (mu + [A,-inf[_s) u (nu + [B,-inf[_s).
TailSeq lambda_seq(Int A, Int B, Int s, const Partition& mu,
                   const Partition& nu);

std::vector<Partition> partitions_of(Int n);

}  // namespace sdual
