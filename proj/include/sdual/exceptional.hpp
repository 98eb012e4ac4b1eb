#pragma once

#include <string>
#include <vector>

#include "sdual/partition.hpp"

namespace sdual {

// One row of the exceptional-group tables: the dual datum of (orbit, eps).
struct ExcEntry {
  std::string group;        // G2, F4, E6, E7, E8
  std::string orbit;        // Bala-Carter label
  std::string a_group;      // component group label
  std::string eps;          // character label
  std::string dual_orbit;
  std::string dual_a_group;
  std::string dual_eps;
};

// The tabulated dual of (group, orbit, eps); throws DomainError on an
// unknown key.
const ExcEntry& exceptional_lookup(const std::string& group,
                                   const std::string& orbit,
                                   const std::string& eps);

// All rows of one group's table, in table order.
std::vector<ExcEntry> exceptional_group(const std::string& group);

const std::vector<ExcEntry>& exceptional_all();

std::vector<std::string> exceptional_group_names();

}  // namespace sdual
