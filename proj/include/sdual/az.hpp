#pragma once

#include <optional>
#include <vector>

#include "sdual/duality.hpp"

namespace sdual {

// Tempered unipotent parameter datum for SO(2n+1): GL block sizes (each
// block carrying the regular nilpotent, i.e. the Steinberg factor) and the
// two symplectic marked partitions attached to the +1/-1 eigenvalue blocks.
struct UnipotentParam {
  std::vector<Int> gl_blocks;  // m_j >= 1
  MarkedPartition plus_block;  // Sp(2n+)
  MarkedPartition minus_block;  // Sp(2n-)

  UnipotentParam();
  UnipotentParam(std::vector<Int> gl, MarkedPartition plus,
                 MarkedPartition minus);

  Int n() const;  // ambient half-size: sum m_j + n+ + n-
};

struct DualOrbit {
  Partition lambda;  // symplectic partition of 2n
  MarkedPartition plus_min, minus_min;
  std::map<Int, int> merged_eps;
  // even part values shared by the two minima with conflicting signs; the
  // merge is reported, never silently resolved
  std::vector<Int> conflicts;
  bool orbit_only = true;  // only the dual orbit is asserted
};

DualOrbit az_dual(const UnipotentParam& p);

}  // namespace sdual
