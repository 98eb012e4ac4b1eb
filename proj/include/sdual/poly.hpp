#pragma once

#include <string>
#include <vector>

#include "sdual/partition.hpp"

namespace sdual {

// Dense univariate polynomial over Z, exact 64-bit arithmetic with overflow
// guards.  The zero polynomial has an empty coefficient vector.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static PolyZ constant(Int v) { return PolyZ({v}); }
  static PolyZ monomial(Int coeff, Int deg);

  bool is_zero() const { return c_.empty(); }
  Int degree() const { return static_cast<Int>(c_.size()) - 1; }
  Int coeff(Int i) const {
    return i >= 0 && i < static_cast<Int>(c_.size()) ? c_[static_cast<size_t>(i)]
                                                     : 0;
  }
  Int leading() const { return is_zero() ? 0 : c_.back(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int eval(Int x) const;
  Int content() const;  // nonnegative gcd of coefficients

  PolyZ operator-() const;
  PolyZ& operator+=(const PolyZ& o);
  PolyZ& operator-=(const PolyZ& o);
  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
  PolyZ scaled(Int k) const;
  // exact division, throws InternalError if not divisible in Z[t]
  PolyZ divide_exact(const PolyZ& d) const;

  bool operator==(const PolyZ& o) const { return c_ == o.c_; }
  bool operator!=(const PolyZ& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

// gcd of primitive parts (primitive pseudo-remainder sequence), monic-ish:
// returns a primitive polynomial with positive leading coefficient.
PolyZ poly_gcd(PolyZ a, PolyZ b);

// Rational function num/den over Q(t), stored as a reduced integer-poly
// fraction with positive leading denominator.
class RatFun {
 public:
  RatFun() : num_(), den_(PolyZ::constant(1)) {}
  RatFun(PolyZ num, PolyZ den);
  static RatFun of(PolyZ p) { return RatFun(std::move(p), PolyZ::constant(1)); }

  const PolyZ& num() const { return num_; }
  const PolyZ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == PolyZ::constant(1); }
  // throws InternalError when the value is not in Z[t]
  PolyZ as_polynomial() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::string to_string() const;

 private:
  void reduce();
  PolyZ num_, den_;
};

// Small dense matrices over Q(t) for the blockwise solve.
using RatMat = std::vector<std::vector<RatFun>>;

RatMat rat_mat(Int rows, Int cols);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat mat_sub(const RatMat& a, const RatMat& b);
RatMat mat_transpose(const RatMat& a);
// Gauss-Jordan inverse; throws DomainError when singular.
RatMat mat_inverse(const RatMat& a);

}  // namespace sdual
