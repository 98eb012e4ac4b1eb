#include "sdual/chartable.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace sdual {

namespace {

// Rim-hook removals via beta-numbers: a k-hook removal is beta_i -> beta_i-k
// landing outside the set; the height sign counts the entries jumped over.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& p,
                                                        Int k) {
  std::vector<std::pair<Partition, int>> out;
  Int L = p.length();
  std::vector<Int> beta;
  for (Int i = 1; i <= L; ++i) beta.push_back(p.part(i) + (L - i));
  for (size_t i = 0; i < beta.size(); ++i) {
    Int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    Int jumped = 0;
    for (Int b : beta)
      if (target < b && b < beta[i]) ++jumped;
    std::vector<Int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<Int>());
    std::vector<Int> parts;
    for (size_t r = 0; r < nb.size(); ++r)
      parts.push_back(nb[r] - (static_cast<Int>(nb.size()) - 1 -
                               static_cast<Int>(r)));
    out.emplace_back(Partition(std::move(parts)),
                     jumped % 2 == 0 ? 1 : -1);
  }
  return out;
}

struct BipKey {
  std::vector<Int> a, b;
  bool operator<(const BipKey& o) const {
    return std::tie(a, b) < std::tie(o.a, o.b);
  }
};

// Murnaghan-Nakayama for the wreath product Z/2 wr S_n: a positive k-cycle
// strips either component with the usual sign, a negative k-cycle puts an
// extra -1 on strips taken from the beta component.
Int wb_value_rec(std::map<BipKey, Int>& state, const std::vector<Int>& cycles,
                 const std::vector<int>& cycle_signs) {
  for (size_t c = 0; c < cycles.size(); ++c) {
    std::map<BipKey, Int> next;
    for (const auto& [key, coef] : state) {
      Partition alpha(key.a), beta(key.b);
      for (const auto& [q, sgn] : remove_rim_hooks(alpha, cycles[c]))
        next[{q.parts(), key.b}] += coef * sgn;
      for (const auto& [q, sgn] : remove_rim_hooks(beta, cycles[c]))
        next[{key.a, q.parts()}] += coef * sgn * cycle_signs[c];
    }
    state = std::move(next);
  }
  Int v = 0;
  for (const auto& [key, coef] : state)
    if (key.a.empty() && key.b.empty()) v += coef;
  return v;
}

Int wreath_char_value(const Partition& alpha, const Partition& beta,
                      const Partition& pos, const Partition& neg) {
  std::vector<Int> cycles;
  std::vector<int> signs;
  for (Int k : pos.parts()) cycles.push_back(k), signs.push_back(1);
  for (Int k : neg.parts()) cycles.push_back(k), signs.push_back(-1);
  std::map<BipKey, Int> state;
  state[{alpha.parts(), beta.parts()}] = 1;
  return wb_value_rec(state, cycles, signs);
}

Int factorial(Int n) {
  Int r = 1;
  for (Int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int centralizer_order_sn(const Partition& mu) {
  Int z = 1;
  std::map<Int, Int> mult;
  for (Int k : mu.parts()) ++mult[k];
  for (auto& [k, m] : mult) {
    for (Int i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  return z;
}

Int centralizer_order_wb(const Partition& pos, const Partition& neg) {
  auto part = [](const Partition& p) {
    Int z = 1;
    std::map<Int, Int> mult;
    for (Int k : p.parts()) ++mult[k];
    for (auto& [k, m] : mult) {
      for (Int i = 0; i < m; ++i) z *= 2 * k;
      z *= factorial(m);
    }
    return z;
  };
  return part(pos) * part(neg);
}

PolyZ class_char_poly(const Partition& pos, const Partition& neg) {
  PolyZ p = PolyZ::constant(1);
  for (Int k : pos.parts()) {
    std::vector<Int> c(static_cast<size_t>(k) + 1, 0);
    c[0] = 1;
    c[static_cast<size_t>(k)] = -1;  // 1 - t^k
    p = p * PolyZ(std::move(c));
  }
  for (Int k : neg.parts()) {
    std::vector<Int> c(static_cast<size_t>(k) + 1, 0);
    c[0] = 1;
    c[static_cast<size_t>(k)] = 1;  // 1 + t^k
    p = p * PolyZ(std::move(c));
  }
  return p;
}

void validate(const CharTable& t) {
  Int total = 0;
  for (const auto& c : t.classes) total += c.size;
  if (total != t.order) throw InternalError("class sizes do not sum to |W|");
  size_t id = t.classes.size();
  for (size_t c = 0; c < t.classes.size(); ++c)
    if (t.classes[c].neg.empty() && t.classes[c].split >= 0 &&
        (t.classes[c].pos.empty() || t.classes[c].pos.part(1) == 1))
      id = c;
  if (id == t.classes.size()) throw InternalError("identity class not found");
  Int sq = 0;
  for (size_t i = 0; i < t.chars.size(); ++i)
    sq += t.values[i][id] * t.values[i][id];
  if (sq != t.order)
    throw InternalError("sum of squared degrees does not equal |W|");
  for (size_t i = 0; i < t.chars.size(); ++i)
    for (size_t j = i; j < t.chars.size(); ++j) {
      Int dot = 0;
      for (size_t c = 0; c < t.classes.size(); ++c)
        dot += t.classes[c].size * t.values[i][c] * t.values[j][c];
      if (dot != (i == j ? t.order : 0))
        throw InternalError("character table fails orthogonality");
    }
}

CharTable build_a(Int n) {
  CharTable t;
  t.type = WeylType::A;
  t.rank = n;
  t.order = factorial(n);
  for (Int d = 1; d <= n; ++d) t.degrees.push_back(d);
  for (const auto& mu : partitions_of(n)) {
    WClass c;
    c.pos = mu;
    c.size = t.order / centralizer_order_sn(mu);
    c.char_poly = class_char_poly(mu, Partition{});
    t.classes.push_back(std::move(c));
  }
  for (const auto& l : partitions_of(n)) {
    t.chars.push_back({l, Partition{}, 0});
    std::vector<Int> row;
    for (const auto& c : t.classes)
      row.push_back(sn_char_value(l, c.pos));
    t.values.push_back(std::move(row));
  }
  validate(t);
  return t;
}

CharTable build_b(Int n) {
  CharTable t;
  t.type = WeylType::B;
  t.rank = n;
  t.order = factorial(n) * (Int{1} << n);
  for (Int d = 1; d <= n; ++d) t.degrees.push_back(2 * d);
  for (Int a = n; a >= 0; --a)
    for (const auto& pos : partitions_of(a))
      for (const auto& neg : partitions_of(n - a)) {
        WClass c;
        c.pos = pos;
        c.neg = neg;
        c.size = t.order / centralizer_order_wb(pos, neg);
        c.char_poly = class_char_poly(pos, neg);
        t.classes.push_back(std::move(c));
      }
  for (const auto& b : bipartitions_of(n)) {
    t.chars.push_back({b.alpha, b.beta, 0});
    std::vector<Int> row;
    for (const auto& c : t.classes)
      row.push_back(wreath_char_value(b.alpha, b.beta, c.pos, c.neg));
    t.values.push_back(std::move(row));
  }
  validate(t);
  return t;
}

bool all_even(const Partition& p) {
  for (Int v : p.parts())
    if (v % 2 != 0) return false;
  return true;
}

CharTable build_d(Int n) {
  CharTable t;
  t.type = WeylType::D;
  t.rank = n;
  t.order = n == 0 ? 1 : factorial(n) * (Int{1} << (n - 1));
  for (Int d = 1; d + 1 <= n; ++d) t.degrees.push_back(2 * d);
  if (n >= 1) t.degrees.push_back(n);
  std::sort(t.degrees.begin(), t.degrees.end());
  Int border = n == 0 ? 1 : factorial(n) * (Int{1} << n);
  for (Int a = n; a >= 0; --a)
    for (const auto& pos : partitions_of(a))
      for (const auto& neg : partitions_of(n - a)) {
        if (neg.length() % 2 != 0) continue;
        Int bsize = border / centralizer_order_wb(pos, neg);
        bool splits = neg.empty() && !pos.empty() && all_even(pos);
        if (splits) {
          for (int s : {1, -1}) {
            WClass c;
            c.pos = pos;
            c.neg = neg;
            c.split = s;
            c.size = bsize / 2;
            c.char_poly = class_char_poly(pos, neg);
            t.classes.push_back(std::move(c));
          }
        } else {
          WClass c;
          c.pos = pos;
          c.neg = neg;
          c.size = bsize;
          c.char_poly = class_char_poly(pos, neg);
          t.classes.push_back(std::move(c));
        }
      }
  for (const auto& b : bipartitions_of(n)) {
    if (b.alpha.lex_less(b.beta)) continue;  // one label per theta-orbit
    if (b.alpha == b.beta && n > 0) {
      // split pair: chi_{1,2} = (chi^B +- Delta)/2 with the difference
      // character supported on the split classes
      for (int idx : {1, 2}) {
        t.chars.push_back({b.alpha, b.beta, idx});
        std::vector<Int> row;
        for (const auto& c : t.classes) {
          Int base = wreath_char_value(b.alpha, b.beta, c.pos, c.neg);
          Int corr = 0;
          if (c.split != 0) {
            std::vector<Int> half;
            for (Int v : c.pos.parts()) half.push_back(v / 2);
            Int chi = sn_char_value(b.alpha, Partition(std::move(half)));
            corr = (Int{1} << c.pos.length()) * chi * c.split;
            if (idx == 2) corr = -corr;
          }
          if ((base + corr) % 2 != 0)
            throw InternalError("split character value is not integral");
          row.push_back((base + corr) / 2);
        }
        t.values.push_back(std::move(row));
      }
    } else {
      t.chars.push_back({b.alpha, b.beta, 0});
      std::vector<Int> row;
      for (const auto& c : t.classes)
        row.push_back(wreath_char_value(b.alpha, b.beta, c.pos, c.neg));
      t.values.push_back(std::move(row));
    }
  }
  validate(t);
  return t;
}

}  // namespace

Int sn_char_value(const Partition& lambda, const Partition& cls) {
  return wreath_char_value(lambda, Partition{}, cls, Partition{});
}

Int wb_char_value(const Partition& alpha, const Partition& beta,
                  const Partition& pos, const Partition& neg) {
  return wreath_char_value(alpha, beta, pos, neg);
}

Int CharTable::char_index(const WCharLabel& l) const {
  for (size_t i = 0; i < chars.size(); ++i)
    if (chars[i] == l) return static_cast<Int>(i);
  throw DomainError("character label not found in table");
}

Int CharTable::dim(Int char_idx) const {
  // the identity class is the one with pos = (1^n), neg = ()
  for (size_t c = 0; c < classes.size(); ++c)
    if (classes[c].neg.empty() &&
        (classes[c].pos.empty() || classes[c].pos.part(1) == 1))
      return values[static_cast<size_t>(char_idx)][c];
  throw InternalError("identity class not found");
}

const CharTable& char_table(WeylType type, Int rank) {
  static std::mutex mu;
  static std::map<std::pair<int, Int>, CharTable> cache;
  Int bound = type == WeylType::D ? 4 : 6;
  if (rank < 0 || rank > bound)
    throw DomainError("character table rank above configured bound");
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(type), rank);
  auto it = cache.find(key);
  if (it == cache.end()) {
    CharTable t;
    switch (type) {
      case WeylType::A: t = build_a(rank); break;
      case WeylType::B: t = build_b(rank); break;
      case WeylType::D: t = build_d(rank); break;
    }
    it = cache.emplace(key, std::move(t)).first;
  }
  return it->second;
}

}  // namespace sdual
