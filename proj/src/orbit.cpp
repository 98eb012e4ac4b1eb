#include "sdual/orbit.hpp"

#include <algorithm>
#include <sstream>

namespace sdual {

std::string to_string(GroupKind g) { return g == GroupKind::Sp ? "Sp" : "SO"; }

GroupKind group_from_string(const std::string& s) {
  if (s == "Sp" || s == "sp") return GroupKind::Sp;
  if (s == "SO" || s == "so") return GroupKind::SO;
  throw DomainError("unknown group kind: " + s);
}

bool is_symplectic(const Partition& lambda) {
  if (lambda.total() % 2 != 0) return false;
  for (Int x : lambda.parts())
    if (x % 2 != 0 && multiplicity(lambda, x) % 2 != 0) return false;
  return true;
}

bool is_orthogonal(const Partition& lambda) {
  for (Int x : lambda.parts())
    if (x % 2 == 0 && multiplicity(lambda, x) % 2 != 0) return false;
  return true;
}

std::vector<Int> delta_values(GroupKind g, const Partition& lambda) {
  if (g == GroupKind::Sp && !is_symplectic(lambda))
    throw DomainError("not a symplectic partition: " + lambda.to_string());
  if (g == GroupKind::SO && !is_orthogonal(lambda))
    throw DomainError("not an orthogonal partition: " + lambda.to_string());
  Int want = (g == GroupKind::Sp) ? 0 : 1;
  std::vector<Int> out;
  for (Int x : lambda.parts())
    if (x % 2 == want && (out.empty() || out.back() != x)) out.push_back(x);
  return out;  // descending
}

MarkedPartition::MarkedPartition(GroupKind g, Partition l, std::map<Int, int> e,
                                 DegTag t)
    : group(g), lambda(std::move(l)), eps(std::move(e)), tag(t) {
  auto delta = delta_values(group, lambda);
  if (eps.size() != delta.size())
    throw DomainError("eps must be defined exactly on Delta(lambda)");
  for (Int v : delta) {
    auto it = eps.find(v);
    if (it == eps.end())
      throw DomainError("eps missing value " + std::to_string(v));
    if (it->second != 1 && it->second != -1)
      throw DomainError("eps values must be +1 or -1");
  }
  if (group == GroupKind::SO) {
    if (!delta.empty() && eps.at(delta.front()) != 1)
      throw DomainError(
          "SO sign class must be given by its canonical representative "
          "(+1 at the largest odd part)");
    bool deg = !lambda.empty() && delta.empty();
    if (deg && tag == DegTag::None)
      throw DomainError("degenerate SO orbit needs a +/- tag");
    if (!deg && tag != DegTag::None)
      throw DomainError("non-degenerate SO orbit must not carry a tag");
  } else if (tag != DegTag::None) {
    throw DomainError("Sp orbits carry no degenerate tag");
  }
}

bool MarkedPartition::degenerate() const {
  return group == GroupKind::SO && !lambda.empty() &&
         delta_values(group, lambda).empty();
}

bool MarkedPartition::operator<(const MarkedPartition& o) const {
  if (group != o.group) return group < o.group;
  if (lambda != o.lambda) return o.lambda.lex_less(lambda);
  if (eps != o.eps) return eps < o.eps;
  return tag < o.tag;
}

std::string MarkedPartition::to_string() const {
  std::ostringstream os;
  os << sdual::to_string(group) << lambda.to_string() << "[";
  bool first = true;
  for (auto& [v, s] : eps) {
    if (!first) os << ",";
    first = false;
    os << v << (s > 0 ? "+" : "-");
  }
  os << "]";
  if (tag == DegTag::Plus) os << "+";
  if (tag == DegTag::Minus) os << "-";
  return os.str();
}

bool closure_leq(GroupKind g, const Partition& a, const Partition& b) {
  if (a.total() != b.total())
    throw DomainError("closure order compares orbits of one group only");
  (void)delta_values(g, a);
  (void)delta_values(g, b);
  return dominance_leq(a, b);
}

std::vector<MarkedPartition> enumerate_marked(GroupKind g, Int size) {
  if (size < 0) throw DomainError("size must be nonnegative");
  std::vector<MarkedPartition> out;
  for (const auto& l : partitions_of(size)) {
    if (g == GroupKind::Sp ? !is_symplectic(l) : !is_orthogonal(l)) continue;
    auto delta = delta_values(g, l);
    if (g == GroupKind::SO && !delta.empty()) {
      // canonical representatives: +1 at the largest value, free below
      Int free = static_cast<Int>(delta.size()) - 1;
      for (Int mask = 0; mask < (Int{1} << free); ++mask) {
        std::map<Int, int> eps;
        eps[delta[0]] = 1;
        for (Int j = 0; j < free; ++j)
          eps[delta[static_cast<size_t>(j + 1)]] = (mask >> j) & 1 ? -1 : 1;
        out.emplace_back(g, l, std::move(eps));
      }
    } else if (g == GroupKind::SO) {
      if (l.empty()) {
        out.emplace_back(g, l, std::map<Int, int>{});
      } else {
        out.emplace_back(g, l, std::map<Int, int>{}, DegTag::Plus);
        out.emplace_back(g, l, std::map<Int, int>{}, DegTag::Minus);
      }
    } else {
      Int free = static_cast<Int>(delta.size());
      for (Int mask = 0; mask < (Int{1} << free); ++mask) {
        std::map<Int, int> eps;
        for (Int j = 0; j < free; ++j)
          eps[delta[static_cast<size_t>(j)]] = (mask >> j) & 1 ? -1 : 1;
        out.emplace_back(g, l, std::move(eps));
      }
    }
  }
  return out;
}

}  // namespace sdual
