#include "sdual/symbol.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sdual {

namespace {

// Positional sign vector for i = 1..t: eps(i) = eps_{lambda_i} on marked
// values, +1 on the others.  Unmarked values come in even-multiplicity runs
// at consecutive positions, so their J-contributions cancel and the choice
// does not affect M.
std::vector<int> positional_eps(const MarkedPartition& m) {
  std::vector<int> e;
  e.reserve(m.lambda.parts().size());
  for (Int v : m.lambda.parts()) {
    auto it = m.eps.find(v);
    e.push_back(it == m.eps.end() ? 1 : it->second);
  }
  return e;
}

// M = |J^1| - |J^{-1}| with J^u = {i : eps(i)(-1)^{i+1} = u}.
Int signed_m(const std::vector<int>& eps) {
  Int m = 0;
  for (size_t i = 0; i < eps.size(); ++i)
    m += (i % 2 == 0 ? eps[i] : -eps[i]);
  return m;
}

struct RowPair {
  // Elements above the common floor, strictly decreasing, plus the first
  // chain element at or below the floor.  Both rows have step-2 tails.
  std::vector<Int> a, b;
  Int a_low = 0, b_low = 0;
  Int floor = 0;
};

std::vector<Int> elements_above(const TailSeq& t, Int floor, Int& low) {
  if (!t.single_chain())
    throw InternalError("symbol rows must be single-chain");
  std::vector<Int> out = t.prefix();
  Int x = t.chain_starts()[0];
  while (x > floor) {
    out.push_back(x);
    x -= t.step();
  }
  low = x;
  return out;
}

RowPair split_rows(const TailSeq& A, const TailSeq& B) {
  RowPair r;
  r.floor = std::min(A.chain_starts()[0], B.chain_starts()[0]) - 1;
  r.a = elements_above(A, r.floor, r.a_low);
  r.b = elements_above(B, r.floor, r.b_low);
  return r;
}

TailSeq rebuild_row(std::vector<Int> elems, Int low) {
  std::sort(elems.begin(), elems.end(), std::greater<Int>());
  return TailSeq(std::move(elems), {low}, 2);
}

// Maximal finite intervals of the symmetric difference of the two rows,
// ascending.  When the two tails occupy different residue classes mod 2 the
// difference continues all the way down; the run reaching the floor is the
// infinite one and is dropped.
std::vector<std::vector<Int>> difference_intervals(const RowPair& r) {
  std::set<Int> sa(r.a.begin(), r.a.end()), sb(r.b.begin(), r.b.end());
  std::set<Int> diff;
  for (Int x : sa)
    if (!sb.count(x)) diff.insert(x);
  for (Int x : sb)
    if (!sa.count(x)) diff.insert(x);
  std::vector<std::vector<Int>> runs;
  for (Int x : diff) {
    if (!runs.empty() && runs.back().back() == x - 1)
      runs.back().push_back(x);
    else
      runs.push_back({x});
  }
  bool residues_differ = ((r.a_low - r.b_low) % 2 + 2) % 2 != 0;
  if (residues_differ) {
    if (runs.empty() || runs.front().front() != r.floor + 1)
      throw InternalError("expected an infinite difference run at the floor");
    runs.erase(runs.begin());
  }
  return runs;
}

struct Construction {
  TailSeq Asharp, Bsharp;
  std::vector<std::vector<Int>> intervals;  // ascending, one per Delta value
  std::vector<Int> delta;                   // ascending
};

// The A^#, B^# rows of the symbol construction together with the interval
// family indexed by Delta(lambda).
Construction build_sharp(GroupKind g, const Partition& lambda) {
  Int t = lambda.length();
  Int off = g == GroupKind::SO ? 0 : -1;
  TailSeq lp = add(lambda, TailSeq::arithmetic(off, 1));
  // split lambda' by parity into 2z and 2z'-1 (SO) resp. 2z'+1 (Sp)
  Int H = t + 6;
  std::vector<Int> vals = lp.first(H);
  std::vector<Int> evens, odds;
  for (Int v : vals) (((v % 2) + 2) % 2 == 0 ? evens : odds).push_back(v);
  Int next = vals.back() - 1;  // staircase from here on
  Int next_even = ((next % 2) + 2) % 2 == 0 ? next : next - 1;
  Int next_odd = ((next % 2) + 2) % 2 == 0 ? next - 1 : next;
  auto half = [](std::vector<Int> v, Int shift) {
    for (auto& x : v) x = (x + shift) / 2;
    return v;
  };
  Int odd_shift = g == GroupKind::SO ? 1 : -1;  // odd entry = 2z' -+ 1
  TailSeq z(half(evens, 0), {next_even / 2}, 1);
  TailSeq zp(half(odds, odd_shift), {(next_odd + odd_shift) / 2}, 1);
  Construction c{
      add(zp, TailSeq::arithmetic(g == GroupKind::SO ? 0 : 1, 1)),
      add(z, TailSeq::arithmetic(0, 1)),
      {},
      {}};
  // interleaving A_1 >= B_1 >= A_2 >= B_2 >= ...
  Int W = t + 4;
  auto av = c.Asharp.first(W), bv = c.Bsharp.first(W);
  for (Int i = 0; i + 1 < W; ++i) {
    if (av[static_cast<size_t>(i)] < bv[static_cast<size_t>(i)] ||
        bv[static_cast<size_t>(i)] < av[static_cast<size_t>(i) + 1])
      throw InternalError("row interleaving A1>=B1>=A2>=... violated");
  }
  c.intervals = difference_intervals(split_rows(c.Asharp, c.Bsharp));
  c.delta = delta_values(g, lambda);
  std::reverse(c.delta.begin(), c.delta.end());  // ascending
  if (c.intervals.size() != c.delta.size())
    throw InternalError("interval family does not match Delta(lambda)");
  return c;
}

void swap_on_interval(RowPair& r, const std::vector<Int>& interval) {
  std::set<Int> iv(interval.begin(), interval.end());
  std::vector<Int> a2, b2;
  for (Int x : r.a) (iv.count(x) ? b2 : a2).push_back(x);
  for (Int x : r.b) (iv.count(x) ? a2 : b2).push_back(x);
  r.a = std::move(a2);
  r.b = std::move(b2);
}

Partition peel_row(const TailSeq& row, Int tail_start) {
  if (row.virtual_start() != tail_start)
    throw InternalError("symbol row has unexpected tail while peeling");
  std::vector<Int> parts;
  for (size_t i = 0; i < row.prefix().size(); ++i)
    parts.push_back(row.prefix()[i] - (tail_start - 2 * static_cast<Int>(i)));
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw InternalError(std::string("peeled row is not a partition: ") +
                        e.what());
  }
}

// Inverse of lambda -> A^# u B^#: the interleaving forces the merged
// sequence to alternate A,B,A,B..., from which z, z' and lambda fall out.
// size < 0 skips the total check (display use).
Partition lambda_from_merged(GroupKind g, const TailSeq& p, Int size) {
  Int H = (size >= 0 ? size : static_cast<Int>(p.prefix().size()) + 8) + 8;
  std::vector<Int> merged = p.first(2 * H);
  std::vector<Int> asharp, bsharp;
  for (Int i = 0; i < 2 * H; ++i)
    (i % 2 == 0 ? asharp : bsharp).push_back(merged[static_cast<size_t>(i)]);
  std::vector<Int> lp;
  Int odd_shift = g == GroupKind::SO ? 1 : -1;
  Int a_off = g == GroupKind::SO ? 0 : 1;
  for (Int i = 0; i < H; ++i) {
    Int zp = asharp[static_cast<size_t>(i)] + i - a_off;  // z'_i
    Int z = bsharp[static_cast<size_t>(i)] + i;           // z_i
    lp.push_back(2 * zp - odd_shift);
    lp.push_back(2 * z);
  }
  std::sort(lp.begin(), lp.end(), std::greater<Int>());
  Int off = g == GroupKind::SO ? 0 : -1;
  std::vector<Int> parts;
  for (Int i = 0; i < H; ++i) {
    Int li = lp[static_cast<size_t>(i)] - off + i;  // undo the staircase
    if (li > 0)
      parts.push_back(li);
    else if (li < 0)
      break;  // past the support; remaining entries are the pure staircase
  }
  Partition lambda(std::move(parts));
  if (size >= 0 && lambda.total() != size)
    throw InternalError("reconstructed partition has wrong size");
  return lambda;
}

Int defect_from_tails(GroupKind g, const TailSeq& A, const TailSeq& B) {
  Int va = A.virtual_start(), vb = B.virtual_start();
  if (g == GroupKind::SO) {
    if (va < 0 || vb != -va)
      throw InternalError("SO symbol tails are not [k / -k]");
    return va;
  }
  if (va >= 0) {
    if (va % 2 != 0 || vb != -va - 1)
      throw InternalError("Sp symbol tails are not [k / -k-1], k even");
    return va;
  }
  if (vb < 1 || vb % 2 != 1 || va != -vb - 1)
    throw InternalError("Sp symbol tails are not [-k-1 / k], k odd");
  return vb;
}

}  // namespace

// ----------------------------------------------------------- small structs

bool Bipartition::operator<(const Bipartition& o) const {
  if (alpha != o.alpha) return alpha.lex_less(o.alpha);
  if (beta != o.beta) return beta.lex_less(o.beta);
  return split < o.split;
}

std::string Bipartition::to_string() const {
  std::string s = "(" + alpha.to_string() + "," + beta.to_string() + ")";
  if (split) s += "[" + std::to_string(split) + "]";
  return s;
}

bool FamilyKey::operator<(const FamilyKey& o) const {
  if (group != o.group) return group < o.group;
  if (size != o.size) return size < o.size;
  return defect < o.defect;
}

std::string FamilyKey::to_string() const {
  return sdual::to_string(group) + "(" + std::to_string(size) +
         "),k=" + std::to_string(defect);
}

bool Symbol::operator==(const Symbol& o) const {
  if (defect != o.defect || ordered != o.ordered) return false;
  if (A == o.A && B == o.B) return true;
  return !ordered && A == o.B && B == o.A;
}

std::string Symbol::to_string() const {
  auto [ra, rb] = to_classical_symbol(*this);
  std::ostringstream os;
  auto row = [&](const std::vector<Int>& v) {
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << ")";
  };
  row(ra);
  os << (ordered ? " / " : " // ");
  row(rb);
  os << " defect " << defect;
  return os.str();
}

bool similar(const Symbol& a, const Symbol& b) {
  return union_merge(a.A, a.B) == union_merge(b.A, b.B);
}

// ------------------------------------------------------------ constructions

Symbol marked_symbol(const MarkedPartition& m) {
  Construction c = build_sharp(m.group, m.lambda);
  auto eps = positional_eps(m);
  Int M = signed_m(eps);
  int w = M >= 0 ? 1 : -1;  // representative twist; only [eps] is meaningful
  int swap_sign = m.group == GroupKind::SO ? -w : -1;

  RowPair rows = split_rows(c.Asharp, c.Bsharp);
  for (size_t i = 0; i < c.delta.size(); ++i) {
    if (m.eps.at(c.delta[i]) == swap_sign) swap_on_interval(rows, c.intervals[i]);
  }
  Symbol s{rebuild_row(rows.a, rows.a_low), rebuild_row(rows.b, rows.b_low), 0,
           true};
  s.defect = defect_from_tails(m.group, s.A, s.B);
  s.ordered = s.defect > 0;
  if (m.group == GroupKind::SO && s.defect != (M >= 0 ? M : -M))
    throw InternalError("SO defect disagrees with |M|");
  if (union_merge(s.A, s.B) != union_merge(c.Asharp, c.Bsharp))
    throw InternalError("interval swaps changed the merged rows");
  return s;
}

Int family_bipartition_total(const FamilyKey& key) {
  if (key.defect < 0) throw DomainError("defect must be nonnegative");
  if (key.group == GroupKind::Sp) {
    if (key.size % 2 != 0) throw DomainError("Sp size must be even");
    Int m2 = key.size - key.defect * (key.defect + 1);
    if (m2 < 0 || m2 % 2 != 0)
      throw DomainError("no Sp family with this size and defect");
    return m2 / 2;
  }
  Int m2 = key.size - key.defect * key.defect;
  if (m2 < 0 || m2 % 2 != 0)
    throw DomainError("no SO family with this size and defect");
  return m2 / 2;
}

Symbol bip_symbol(const FamilyKey& key, const Bipartition& b) {
  Int m = family_bipartition_total(key);
  if (b.total() != m)
    throw DomainError("bipartition size does not match the family");
  Int k = key.defect;
  Symbol s;
  s.defect = k;
  s.ordered = k > 0;
  if (key.group == GroupKind::SO) {
    s.A = add(b.alpha, TailSeq::arithmetic(k, 2));
    s.B = add(b.beta, TailSeq::arithmetic(-k, 2));
  } else if (k % 2 == 0) {
    s.A = add(b.alpha, TailSeq::arithmetic(k, 2));
    s.B = add(b.beta, TailSeq::arithmetic(-k - 1, 2));
  } else {
    s.A = add(b.beta, TailSeq::arithmetic(-k - 1, 2));
    s.B = add(b.alpha, TailSeq::arithmetic(k, 2));
  }
  return s;
}

Bipartition canonical_member(const FamilyKey& key, Bipartition b) {
  bool unordered = key.group == GroupKind::SO && key.defect == 0;
  if (b.split != 0) {
    if (!unordered || b.alpha != b.beta)
      throw DomainError("split index only labels SO defect-0 slots with alpha==beta");
  }
  if (unordered && b.beta != b.alpha && b.alpha.lex_less(b.beta))
    std::swap(b.alpha, b.beta);
  if (unordered && b.alpha == b.beta && b.split == 0 && key.size > 0)
    throw DomainError("this SO defect-0 slot needs a split index (1 or 2)");
  return b;
}

std::pair<FamilyKey, Bipartition> gsc_forward(const MarkedPartition& m) {
  Symbol s = marked_symbol(m);
  FamilyKey key{m.group, m.size(), s.defect};
  Int k = s.defect;
  Bipartition b;
  if (m.group == GroupKind::SO) {
    b.alpha = peel_row(s.A, k);
    b.beta = peel_row(s.B, -k);
  } else if (k % 2 == 0) {
    b.alpha = peel_row(s.A, k);
    b.beta = peel_row(s.B, -k - 1);
  } else {
    b.alpha = peel_row(s.B, k);
    b.beta = peel_row(s.A, -k - 1);
  }
  if (b.total() != family_bipartition_total(key))
    throw InternalError("peeled bipartition has wrong size");
  if (m.degenerate()) {
    if (!(k == 0 && b.alpha == b.beta))
      throw InternalError("degenerate orbit did not land on a split slot");
    b.split = m.tag == DegTag::Plus ? 1 : 2;
  }
  return {key, canonical_member(key, b)};
}

MarkedPartition gsc_inverse(const FamilyKey& key, const Bipartition& b0) {
  Bipartition b = canonical_member(key, b0);
  Symbol target = bip_symbol(key, b);
  Partition lambda =
      lambda_from_merged(key.group, union_merge(target.A, target.B), key.size);
  if (key.group == GroupKind::Sp ? !is_symplectic(lambda)
                                 : !is_orthogonal(lambda))
    throw InternalError("reconstructed partition fails the parity test");

  Construction c = build_sharp(key.group, lambda);
  auto delta_desc = delta_values(key.group, lambda);

  // Degenerate SO orbits: no swaps to recover, the split index is the tag.
  if (key.group == GroupKind::SO && !lambda.empty() && delta_desc.empty()) {
    MarkedPartition m(key.group, lambda, {},
                      b.split == 1 ? DegTag::Plus : DegTag::Minus);
    if (gsc_forward(m) != std::make_pair(key, b))
      throw InternalError("degenerate inverse failed the round trip");
    return m;
  }

  bool unordered = !target.ordered;
  for (int orient = 0; orient < (unordered ? 2 : 1); ++orient) {
    const TailSeq& TA = orient == 0 ? target.A : target.B;
    Int low_unused;
    std::vector<Int> ta =
        elements_above(TA, std::min(c.Asharp.chain_starts()[0],
                                    c.Bsharp.chain_starts()[0]) -
                               1,
                       low_unused);
    std::set<Int> ta_set(ta.begin(), ta.end());
    RowPair sharp = split_rows(c.Asharp, c.Bsharp);
    std::set<Int> sa(sharp.a.begin(), sharp.a.end());
    std::set<Int> sb(sharp.b.begin(), sharp.b.end());
    // swap pattern per interval, matched against the target A-row
    std::vector<int> swapped(c.intervals.size(), 0);
    bool ok = true;
    for (size_t i = 0; i < c.intervals.size() && ok; ++i) {
      bool like_a = true, like_b = true;
      for (Int x : c.intervals[i]) {
        bool in_target = ta_set.count(x) != 0;
        if (in_target != (sa.count(x) != 0)) like_a = false;
        if (in_target != (sb.count(x) != 0)) like_b = false;
      }
      if (like_a)
        swapped[i] = 0;
      else if (like_b)
        swapped[i] = 1;
      else
        ok = false;
    }
    if (!ok) continue;
    // Sp signs are absolute; for SO the global flip is absorbed by [eps],
    // so one candidate per orientation suffices.
    std::map<Int, int> eps;
    for (size_t i = 0; i < c.delta.size(); ++i)
      eps[c.delta[i]] = swapped[i] ? -1 : 1;
    if (key.group == GroupKind::SO && !delta_desc.empty() &&
        eps[delta_desc.front()] != 1)
      for (auto& [v, sgn] : eps) sgn = -sgn;  // canonical representative
    MarkedPartition m(key.group, lambda, eps);
    if (gsc_forward(m) == std::make_pair(key, b)) return m;
    if (key.group == GroupKind::Sp)
      throw InternalError("Sp inverse failed the round trip");
  }
  throw InternalError("no sign class reproduces the target symbol");
}

Bipartition sign_twist(const FamilyKey& key, const Bipartition& b) {
  Bipartition t(b.beta.transpose(), b.alpha.transpose(), b.split);
  return canonical_member(key, t);
}

std::pair<std::vector<Int>, std::vector<Int>> to_classical_symbol(
    const Symbol& s) {
  // Row lengths per the finite display form: (t+k)/2 and (t-k)/2 entries,
  // each shifted by floor(t/2), rows increasing.  t is recovered from the
  // merged rows; for Sp it is padded to match the defect parity.
  GroupKind g = s.A.virtual_start() + s.B.virtual_start() == 0 ? GroupKind::SO
                                                               : GroupKind::Sp;
  Partition lambda = lambda_from_merged(g, union_merge(s.A, s.B), -1);
  Int t = lambda.length();
  Int k = s.defect;
  if ((t - k) % 2 != 0) ++t;  // Sp padding parity
  Int sft = t / 2;
  auto row = [sft](const TailSeq& r, Int len) {
    std::vector<Int> v = r.first(len);
    std::reverse(v.begin(), v.end());
    for (auto& x : v) x += sft;
    return v;
  };
  return {row(s.A, (t + k) / 2), row(s.B, (t - k) / 2)};
}

std::vector<Bipartition> bipartitions_of(Int m) {
  std::vector<Bipartition> out;
  for (Int a = m; a >= 0; --a)
    for (const auto& al : partitions_of(a))
      for (const auto& be : partitions_of(m - a)) out.emplace_back(al, be);
  return out;
}

std::vector<FamilyKey> families(GroupKind g, Int size) {
  std::vector<FamilyKey> out;
  for (Int k = 0;; ++k) {
    if (g == GroupKind::Sp) {
      if (k * (k + 1) > size) break;
      out.push_back({g, size, k});
    } else {
      if (k * k > size) break;
      if (k % 2 == size % 2) out.push_back({g, size, k});
    }
  }
  return out;
}

std::vector<Bipartition> family_members(const FamilyKey& key) {
  Int m = family_bipartition_total(key);
  std::vector<Bipartition> out;
  bool unordered = key.group == GroupKind::SO && key.defect == 0;
  for (const auto& b : bipartitions_of(m)) {
    if (!unordered) {
      out.push_back(b);
      continue;
    }
    if (b.alpha == b.beta) {
      if (key.size == 0) {
        out.push_back(b);
      } else {
        out.emplace_back(b.alpha, b.beta, 1);
        out.emplace_back(b.alpha, b.beta, 2);
      }
    } else if (!b.alpha.lex_less(b.beta)) {
      out.push_back(b);  // one representative per theta-orbit
    }
  }
  return out;
}

}  // namespace sdual
