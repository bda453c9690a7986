#pragma once

#include <algorithm>
#include <complex>
#include <string>

#include "hyper3/algebra/poly.hpp"

namespace hyper3 {

/// Reduced rational function num/den over Q with monic denominator.
class RatFn {
 public:
  RatFn() : den_(Rat(1)) {}
  RatFn(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
  RatFn(long c) : RatFn(Rat(c)) {}                // NOLINT(google-explicit-constructor)
  RatFn(const Poly& p) : num_(p), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
  RatFn(const Poly& num, const Poly& den);

  static RatFn x() { return RatFn(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant function (num's constant coefficient).
  Rat constant_value() const { return num_.coeff(0); }
  /// max(deg num, deg den); 0 for constants.
  int degree() const { return std::max(std::max(num_.degree(), den_.degree()), 0); }

  RatFn operator-() const;
  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  RatFn pow(int n) const;
  RatFn diff(int n = 1) const;
  /// f(g(x)); g must be non-constant.
  RatFn compose(const RatFn& g) const;
  /// f(x^k)
  RatFn inflate(int k) const;
  /// f(x^(1/k)); requires both supports divisible by k.
  RatFn deflate(int k) const;

  Rat eval(const Rat& t) const;
  bool has_pole(const Rat& t) const { return sgn(den_.eval(t)) == 0; }
  std::complex<double> eval(std::complex<double> t) const;

 private:
  Poly num_;
  Poly den_;
};

std::string to_string(const RatFn& f);

/// Largest k with f(x) = g(x^k); 0 means "any" (constant f).
int exponent_support_gcd(const RatFn& f);

/// Order of f at x0: positive for zeros, negative for poles. Zero function
/// reports a large sentinel.
inline constexpr int kInfiniteOrder = 1 << 28;
int order_at(const RatFn& f, const Rat& x0);
/// Order at infinity: deg den - deg num.
int order_at_infinity(const RatFn& f);
/// Coefficient of (x - x0)^n in the Laurent expansion of f at x0.
Rat laurent_coeff(const RatFn& f, const Rat& x0, int n);
/// Coefficient of x^-n in the expansion of f at infinity (f = sum c_n x^-n).
Rat laurent_coeff_at_infinity(const RatFn& f, int n);

}  // namespace hyper3
