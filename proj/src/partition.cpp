#include "sdual/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sdual {

namespace {

Int lcm_ll(Int a, Int b) { return a / std::gcd(a, b) * b; }

std::string join(const std::vector<Int>& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw DomainError("partition parts must be positive: " + join(parts_, ","));
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw DomainError("partition not weakly decreasing: " + join(parts_, ","));
  }
}

Partition Partition::from_multiset(std::vector<Int> values) {
  std::sort(values.begin(), values.end(), std::greater<Int>());
  return Partition(std::move(values));
}

Int Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Int Partition::part(Int i) const {
  if (i < 1) throw DomainError("partition index is 1-based");
  return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

Partition Partition::transpose() const {
  if (parts_.empty()) return Partition{};
  std::vector<Int> t(static_cast<size_t>(parts_[0]), 0);
  for (Int p : parts_)
    for (Int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  return "(" + join(parts_, ",") + ")";
}

Int multiplicity(const Partition& p, Int r) {
  Int c = 0;
  for (Int x : p.parts()) c += (x == r);
  return c;
}

Int partial_sum(const Partition& p, Int c) {
  if (c < 1) throw DomainError("partial_sum needs c >= 1");
  Int s = 0;
  for (Int i = 1; i <= c && i <= p.length(); ++i) s += p.part(i);
  return s;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  Int n = std::max(a.length(), b.length());
  Int sa = 0, sb = 0;
  for (Int i = 1; i <= n; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

Partition union_merge(const Partition& a, const Partition& b) {
  std::vector<Int> v;
  v.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
             b.parts().end(), std::back_inserter(v), std::greater<Int>());
  return Partition(std::move(v));
}

Partition add(const Partition& a, const Partition& b) {
  std::vector<Int> v;
  Int n = std::max(a.length(), b.length());
  for (Int i = 1; i <= n; ++i) v.push_back(a.part(i) + b.part(i));
  return Partition(std::move(v));
}

std::vector<Partition> partitions_of(Int n) {
  if (n < 0) throw DomainError("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<Int> cur;
  // descending lexicographic enumeration, largest part first
  auto rec = [&](auto&& self, Int rest, Int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (Int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// ------------------------------------------------------------------ TailSeq

TailSeq::TailSeq(std::vector<Int> prefix, std::vector<Int> chain_starts,
                 Int step)
    : prefix_(std::move(prefix)), starts_(std::move(chain_starts)), step_(step) {
  if (step_ < 1) throw DomainError("TailSeq step must be positive");
  if (starts_.empty()) throw DomainError("TailSeq needs at least one chain");
  std::sort(starts_.begin(), starts_.end(), std::greater<Int>());
  for (size_t i = 0; i + 1 < prefix_.size(); ++i)
    if (prefix_[i] < prefix_[i + 1])
      throw DomainError("TailSeq prefix not weakly decreasing");
  if (!prefix_.empty() && prefix_.back() < starts_.front())
    throw DomainError("TailSeq prefix ends below the chain region");
  canonicalize();
}

void TailSeq::canonicalize() {
  while (!prefix_.empty()) {
    bool absorbed = false;
    for (auto& s : starts_) {
      if (prefix_.back() == s + step_) {
        s += step_;
        prefix_.pop_back();
        absorbed = true;
        break;
      }
    }
    if (!absorbed) break;
    std::sort(starts_.begin(), starts_.end(), std::greater<Int>());
  }
}

Int TailSeq::at(Int i) const {
  if (i < 1) throw DomainError("TailSeq index is 1-based");
  return first(i)[static_cast<size_t>(i - 1)];
}

std::vector<Int> TailSeq::first(Int n) const {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(std::max<Int>(n, 0)));
  for (Int x : prefix_) {
    if (static_cast<Int>(out.size()) >= n) return out;
    out.push_back(x);
  }
  std::vector<Int> cur = starts_;  // descending
  while (static_cast<Int>(out.size()) < n) {
    // pop the largest current chain value
    size_t best = 0;
    for (size_t j = 1; j < cur.size(); ++j)
      if (cur[j] > cur[best]) best = j;
    out.push_back(cur[best]);
    cur[best] -= step_;
  }
  return out;
}

Int TailSeq::virtual_start() const {
  if (!single_chain())
    throw DomainError("virtual_start defined for single-chain TailSeq only");
  return starts_[0] + static_cast<Int>(prefix_.size()) * step_;
}

TailSeq TailSeq::with_step(Int L) const {
  if (L % step_ != 0)
    throw DomainError("with_step needs a multiple of the current step");
  Int m = L / step_;
  std::vector<Int> st;
  st.reserve(starts_.size() * static_cast<size_t>(m));
  for (Int s : starts_)
    for (Int j = 0; j < m; ++j) st.push_back(s - j * step_);
  return TailSeq(prefix_, std::move(st), L);
}

std::pair<std::vector<Int>, TailSeq> TailSeq::split_at(Int n) const {
  std::vector<Int> head;
  head.reserve(static_cast<size_t>(std::max<Int>(n, 0)));
  size_t pi = 0;
  std::vector<Int> cur = starts_;
  while (static_cast<Int>(head.size()) < n) {
    if (pi < prefix_.size()) {
      head.push_back(prefix_[pi++]);
      continue;
    }
    size_t best = 0;
    for (size_t j = 1; j < cur.size(); ++j)
      if (cur[j] > cur[best]) best = j;
    head.push_back(cur[best]);
    cur[best] -= step_;
  }
  std::vector<Int> rest_prefix(prefix_.begin() + static_cast<long>(pi),
                               prefix_.end());
  return {std::move(head), TailSeq(std::move(rest_prefix), std::move(cur), step_)};
}

bool TailSeq::operator==(const TailSeq& o) const {
  Int L = lcm_ll(step_, o.step_);
  TailSeq a = with_step(L), b = o.with_step(L);
  return a.prefix_ == b.prefix_ && a.starts_ == b.starts_;
}

std::string TailSeq::to_string() const {
  std::ostringstream os;
  os << "(";
  for (Int x : first(static_cast<Int>(prefix_.size() + 2 * starts_.size()))) {
    os << x << ",";
  }
  os << "... step " << step_ << ")";
  return os.str();
}

Int multiplicity(const TailSeq& t, Int r) {
  Int c = 0;
  for (Int x : t.prefix()) c += (x == r);
  for (Int s : t.chain_starts())
    if (r <= s && (s - r) % t.step() == 0) ++c;
  return c;
}

Int partial_sum(const TailSeq& t, Int c) {
  if (c < 1) throw DomainError("partial_sum needs c >= 1");
  Int s = 0;
  for (Int x : t.first(c)) s += x;
  return s;
}

// The difference d_i = a_i - b_i of two eventually arithmetic sequences is,
// past an explicit index, periodic with a constant drift per period, so the
// partial-sum differences D(c) follow a quadratic in the period count and
// sup_c D(c) is attained in a computable window.  No guessing is needed.
bool dominance_leq(const TailSeq& a0, const TailSeq& b0) {
  Int L = lcm_ll(a0.step(), b0.step());
  TailSeq a = a0.with_step(L), b = b0.with_step(L);
  auto periodic_from = [L](const TailSeq& t) {
    // index from which the chain merge is exactly periodic
    Int spread = 0;
    Int mn = t.chain_starts().back();
    for (Int s : t.chain_starts()) spread += (s - mn) / L;
    return static_cast<Int>(t.prefix().size()) + spread +
           static_cast<Int>(t.chain_starts().size());
  };
  Int ka = a.chain_count(), kb = b.chain_count();
  Int p = lcm_ll(ka, kb);
  Int i1 = std::max(periodic_from(a), periodic_from(b));
  Int drop_a = L * (p / ka), drop_b = L * (p / kb);
  Int delta = drop_a - drop_b;  // d_{i+p} = d_i - delta for i > i1

  Int horizon = i1 + 2 * p + 2;
  std::vector<Int> av = a.first(horizon), bv = b.first(horizon);
  std::vector<Int> D(static_cast<size_t>(horizon) + 1, 0);
  for (Int c = 1; c <= horizon; ++c) {
    D[static_cast<size_t>(c)] = D[static_cast<size_t>(c - 1)] +
                                av[static_cast<size_t>(c - 1)] -
                                bv[static_cast<size_t>(c - 1)];
    if (c <= i1 + p && D[static_cast<size_t>(c)] > 0) return false;
  }
  if (delta < 0) return false;  // a eventually outgrows b termwise
  // For each offset r, D(i1+r+m*p) = D(i1+r) + m*T_r - delta*p*m*(m-1)/2.
  for (Int r = 1; r <= p; ++r) {
    Int base = D[static_cast<size_t>(i1 + r)];
    Int T = D[static_cast<size_t>(i1 + r + p)] - base;
    auto q = [&](Int m) { return base + m * T - delta * p * m * (m - 1) / 2; };
    if (delta == 0) {
      if (T > 0) return false;
      if (q(1) > 0) return false;  // T <= 0: nonincreasing afterwards
      continue;
    }
    Int mstar = T / (delta * p) + 1;  // near the quadratic's vertex
    for (Int m : {Int{1}, mstar - 1, mstar, mstar + 1})
      if (m >= 1 && q(m) > 0) return false;
  }
  return true;
}

TailSeq union_merge(const TailSeq& a0, const TailSeq& b0) {
  Int L = lcm_ll(a0.step(), b0.step());
  TailSeq a = a0.with_step(L), b = b0.with_step(L);
  Int cut = std::min(a.chain_starts().back(), b.chain_starts().back());
  auto upper_part = [cut, L](const TailSeq& t, std::vector<Int>& vals,
                             std::vector<Int>& starts) {
    for (Int x : t.prefix()) vals.push_back(x);
    for (Int s : t.chain_starts()) {
      Int x = s;
      while (x > cut) {
        vals.push_back(x);
        x -= L;
      }
      starts.push_back(x);
    }
  };
  std::vector<Int> vals, starts;
  upper_part(a, vals, starts);
  upper_part(b, vals, starts);
  std::sort(vals.begin(), vals.end(), std::greater<Int>());
  return TailSeq(std::move(vals), std::move(starts), L);
}

TailSeq add(const Partition& a, const TailSeq& b) {
  Int n = std::max(a.length(), static_cast<Int>(b.prefix().size()));
  auto [head, rest] = b.split_at(n);
  for (Int i = 1; i <= n; ++i) head[static_cast<size_t>(i - 1)] += a.part(i);
  return TailSeq(std::move(head), rest.chain_starts(), rest.step());
}

TailSeq add(const TailSeq& a, const TailSeq& b) {
  if (!a.single_chain() || !b.single_chain())
    throw DomainError("termwise sum needs single-chain tails");
  Int n = std::max(a.prefix().size(), b.prefix().size());
  std::vector<Int> head(static_cast<size_t>(n));
  std::vector<Int> av = a.first(n + 1), bv = b.first(n + 1);
  for (Int i = 0; i < n; ++i)
    head[static_cast<size_t>(i)] =
        av[static_cast<size_t>(i)] + bv[static_cast<size_t>(i)];
  Int start = av[static_cast<size_t>(n)] + bv[static_cast<size_t>(n)];
  return TailSeq(std::move(head), {start}, a.step() + b.step());
}

TailSeq lambda_seq(Int A, Int B, Int s, const Partition& mu,
                   const Partition& nu) {
  return union_merge(add(mu, TailSeq::arithmetic(A, s)),
                     add(nu, TailSeq::arithmetic(B, s)));
}

}  // namespace sdual
