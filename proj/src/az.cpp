#include "sdual/az.hpp"

namespace sdual {

UnipotentParam::UnipotentParam()
    : plus_block(GroupKind::Sp, Partition{}, {}),
      minus_block(GroupKind::Sp, Partition{}, {}) {}

UnipotentParam::UnipotentParam(std::vector<Int> gl, MarkedPartition plus,
                               MarkedPartition minus)
    : gl_blocks(std::move(gl)),
      plus_block(std::move(plus)),
      minus_block(std::move(minus)) {
  for (Int m : gl_blocks)
    if (m < 1) throw DomainError("GL block sizes must be positive");
  if (plus_block.group != GroupKind::Sp || minus_block.group != GroupKind::Sp)
    throw DomainError("eigenvalue blocks must be symplectic marked partitions");
}

Int UnipotentParam::n() const {
  Int s = 0;
  for (Int m : gl_blocks) s += m;
  return s + plus_block.size() / 2 + minus_block.size() / 2;
}

DualOrbit az_dual(const UnipotentParam& p) {
  DualOrbit d;
  d.plus_min = min_marked(p.plus_block);
  d.minus_min = min_marked(p.minus_block);
  Int ones = 0;
  for (Int m : p.gl_blocks) ones += 2 * m;
  std::vector<Int> ones_part(static_cast<size_t>(ones), 1);
  d.lambda = union_merge(union_merge(d.plus_min.lambda, d.minus_min.lambda),
                         Partition(std::move(ones_part)));
  if (!is_symplectic(d.lambda))
    throw InternalError("AZ dual support is not symplectic");
  if (d.lambda.total() != 2 * p.n())
    throw InternalError("AZ dual support has the wrong total");
  d.merged_eps = d.plus_min.eps;
  for (const auto& [v, s] : d.minus_min.eps) {
    auto [it, fresh] = d.merged_eps.emplace(v, s);
    if (!fresh && it->second != s) d.conflicts.push_back(v);
  }
  return d;
}

}  // namespace sdual
