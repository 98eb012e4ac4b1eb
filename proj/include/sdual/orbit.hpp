#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdual/partition.hpp"

namespace sdual {

enum class GroupKind { Sp, SO };

std::string to_string(GroupKind g);
GroupKind group_from_string(const std::string& s);

enum class DegTag { None, Plus, Minus };

// A nilpotent orbit datum: a symplectic/orthogonal partition together with
// a sign on each bad-parity part value (even values for Sp, odd for SO).
// SO stores one canonical representative of the sign class [eps] (the sign
// at the largest marked value is +1) plus a +/- tag on degenerate orbits
// (nonempty lambda with only even parts), which name two orbits each.
struct MarkedPartition {
  GroupKind group = GroupKind::Sp;
  Partition lambda;
  std::map<Int, int> eps;  // value in Delta(lambda) -> +1/-1
  DegTag tag = DegTag::None;

  MarkedPartition() = default;
  MarkedPartition(GroupKind g, Partition l, std::map<Int, int> e,
                  DegTag t = DegTag::None);

  Int size() const { return lambda.total(); }
  bool degenerate() const;

  bool operator==(const MarkedPartition& o) const {
    return group == o.group && lambda == o.lambda && eps == o.eps &&
           tag == o.tag;
  }
  bool operator!=(const MarkedPartition& o) const { return !(*this == o); }
  bool operator<(const MarkedPartition& o) const;  // deterministic order

  std::string to_string() const;
};

bool is_symplectic(const Partition& lambda);
bool is_orthogonal(const Partition& lambda);

// Jord_bp: the even (Sp) / odd (SO) part values present in lambda.
std::vector<Int> delta_values(GroupKind g, const Partition& lambda);

// Closure order on orbits of one group = dominance order on partitions.
bool closure_leq(GroupKind g, const Partition& a, const Partition& b);

// All pairs (lambda,eps) for Sp(size) resp. (lambda,[eps]) with degenerate
// doubling for SO(size), in a deterministic order.
std::vector<MarkedPartition> enumerate_marked(GroupKind g, Int size);

}  // namespace sdual
