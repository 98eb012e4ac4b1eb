#include "sdual/poly.hpp"

#include <numeric>
#include <sstream>

namespace sdual {

namespace {

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InternalError("polynomial coefficient overflow (mul)");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw InternalError("polynomial coefficient overflow (add)");
  return r;
}

}  // namespace

PolyZ PolyZ::monomial(Int coeff, Int deg) {
  if (deg < 0) throw DomainError("monomial degree must be nonnegative");
  std::vector<Int> c(static_cast<size_t>(deg) + 1, 0);
  c.back() = coeff;
  return PolyZ(std::move(c));
}

Int PolyZ::eval(Int x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    r = checked_add(checked_mul(r, x), *it);
  return r;
}

Int PolyZ::content() const {
  Int g = 0;
  for (Int v : c_) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

PolyZ PolyZ::operator-() const {
  PolyZ r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

PolyZ& PolyZ::operator+=(const PolyZ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  trim();
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], -o.c_[i]);
  trim();
  return *this;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return PolyZ{};
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  return PolyZ(std::move(c));
}

PolyZ PolyZ::scaled(Int k) const {
  PolyZ r = *this;
  for (auto& v : r.c_) v = checked_mul(v, k);
  r.trim();
  return r;
}

PolyZ PolyZ::divide_exact(const PolyZ& d) const {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  PolyZ rem = *this;
  if (rem.is_zero()) return PolyZ{};
  if (rem.degree() < d.degree())
    throw InternalError("exact division: degree too small");
  std::vector<Int> q(static_cast<size_t>(rem.degree() - d.degree()) + 1, 0);
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    if (rem.leading() % d.leading() != 0)
      throw InternalError("exact division: leading coefficient not divisible");
    Int f = rem.leading() / d.leading();
    Int shift = rem.degree() - d.degree();
    q[static_cast<size_t>(shift)] = f;
    rem -= PolyZ::monomial(f, shift) * d;
  }
  if (!rem.is_zero()) throw InternalError("exact division: nonzero remainder");
  return PolyZ(std::move(q));
}

std::string PolyZ::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (Int i = degree(); i >= 0; --i) {
    Int v = coeff(i);
    if (v == 0) continue;
    if (!first) os << (v > 0 ? "+" : "-");
    else if (v < 0) os << "-";
    Int a = v < 0 ? -v : v;
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

namespace {

PolyZ primitive(PolyZ p) {
  Int c = p.content();
  if (c > 1) p = p.divide_exact(PolyZ::constant(c));
  if (p.leading() < 0) p = -p;
  return p;
}

// pseudo-remainder of a by b (deg a >= deg b)
PolyZ pseudo_rem(PolyZ a, const PolyZ& b) {
  Int lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    // scale a so the leading term cancels exactly
    Int la = a.leading();
    Int g = std::gcd(la < 0 ? -la : la, lb < 0 ? -lb : lb);
    a = a.scaled(lb / g);
    a -= PolyZ::monomial(la / g, a.degree() - b.degree()) * b;
  }
  return a;
}

}  // namespace

PolyZ poly_gcd(PolyZ a, PolyZ b) {
  if (a.is_zero()) return b.is_zero() ? PolyZ{} : primitive(std::move(b));
  if (b.is_zero()) return primitive(std::move(a));
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    PolyZ r = primitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RatFun::RatFun(PolyZ num, PolyZ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  reduce();
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = PolyZ::constant(1);
    return;
  }
  PolyZ g = poly_gcd(num_, den_);
  if (g.degree() > 0 || g.leading() != 1) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  Int cn = num_.content(), cd = den_.content();
  Int c = std::gcd(cn, cd);
  if (c > 1) {
    num_ = num_.divide_exact(PolyZ::constant(c));
    den_ = den_.divide_exact(PolyZ::constant(c));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

PolyZ RatFun::as_polynomial() const {
  if (!is_polynomial())
    throw InternalError("value is not a polynomial: " + to_string());
  return num_;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatMat rat_mat(Int rows, Int cols) {
  return RatMat(static_cast<size_t>(rows),
                std::vector<RatFun>(static_cast<size_t>(cols)));
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  RatMat r = rat_mat(static_cast<Int>(n), static_cast<Int>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      RatFun s;
      for (size_t l = 0; l < k; ++l) s = s + a[i][l] * b[l][j];
      r[i][j] = s;
    }
  return r;
}

RatMat mat_sub(const RatMat& a, const RatMat& b) {
  RatMat r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

RatMat mat_transpose(const RatMat& a) {
  if (a.empty()) return a;
  RatMat r = rat_mat(static_cast<Int>(a[0].size()), static_cast<Int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

RatMat mat_inverse(const RatMat& a) {
  size_t n = a.size();
  RatMat m = a;
  RatMat inv = rat_mat(static_cast<Int>(n), static_cast<Int>(n));
  for (size_t i = 0; i < n; ++i) inv[i][i] = RatFun::of(PolyZ::constant(1));
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw DomainError("singular matrix in blockwise solve");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    RatFun d = m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] / d;
      inv[col][j] = inv[col][j] / d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      RatFun f = m[i][col];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] = m[i][j] - f * m[col][j];
        inv[i][j] = inv[i][j] - f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace sdual
