#include "sdual/exceptional.hpp"

#include <mutex>
#include <sstream>

namespace sdual {

namespace {

const char* kTableData =
#include "exceptional_tables.inc"
    ;

std::vector<ExcEntry> parse_table() {
  std::vector<ExcEntry> rows;
  std::istringstream in(kTableData);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, '\t')) cols.push_back(field);
    if (cols.size() != 7)
      throw InternalError("exceptional table row with " +
                          std::to_string(cols.size()) + " columns: " + line);
    rows.push_back(
        {cols[0], cols[1], cols[2], cols[3], cols[4], cols[5], cols[6]});
  }
  // key uniqueness
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j)
      if (rows[i].group == rows[j].group && rows[i].orbit == rows[j].orbit &&
          rows[i].eps == rows[j].eps)
        throw InternalError("duplicate exceptional key: " + rows[i].group +
                            " " + rows[i].orbit + " " + rows[i].eps);
  return rows;
}

}  // namespace

const std::vector<ExcEntry>& exceptional_all() {
  static std::vector<ExcEntry> rows = parse_table();
  return rows;
}

const ExcEntry& exceptional_lookup(const std::string& group,
                                   const std::string& orbit,
                                   const std::string& eps) {
  for (const auto& r : exceptional_all())
    if (r.group == group && r.orbit == orbit && r.eps == eps) return r;
  throw DomainError("no exceptional table row for (" + group + ", " + orbit +
                    ", " + eps + ")");
}

std::vector<ExcEntry> exceptional_group(const std::string& group) {
  std::vector<ExcEntry> out;
  for (const auto& r : exceptional_all())
    if (r.group == group) out.push_back(r);
  if (out.empty()) throw DomainError("unknown exceptional group: " + group);
  return out;
}

std::vector<std::string> exceptional_group_names() {
  return {"G2", "F4", "E6", "E7", "E8"};
}

}  // namespace sdual
