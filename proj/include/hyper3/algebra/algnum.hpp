#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hyper3/algebra/rat.hpp"

namespace hyper3 {

/// p + q*sqrt(d): a rational, or an element of a quadratic field with d a
/// squarefree integer other than 0 and 1. Arithmetic mixing two different
/// quadratic fields throws std::domain_error.
class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(const Rat& r) : p_(r) {}  // NOLINT(google-explicit-constructor)
  AlgNum(long r) : p_(r) {}        // NOLINT(google-explicit-constructor)
  /// p + q*sqrt(d) for any rational d; the square factor of d is pulled out.
  static AlgNum quadratic(const Rat& p, const Rat& q, const Rat& d);
  /// sqrt(r) with the principal branch (i*sqrt(|r|) for negative r).
  static AlgNum sqrt(const Rat& r);

  bool is_rational() const { return sgn(q_) == 0; }
  bool is_integer() const { return is_rational() && p_.get_den() == 1; }
  /// Integer <= 0.
  bool is_nonpositive_integer() const { return is_integer() && sgn(p_) <= 0; }
  const Rat& rational_part() const { return p_; }
  const Rat& surd_coeff() const { return q_; }
  const Int& radicand() const { return d_; }

  AlgNum operator-() const;
  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum& operator*=(const AlgNum& o);
  AlgNum& operator/=(const AlgNum& o);
  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(AlgNum a, const AlgNum& b) { return a *= b; }
  friend AlgNum operator/(AlgNum a, const AlgNum& b) { return a /= b; }
  friend bool operator==(const AlgNum& a, const AlgNum& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && (a.is_rational() || a.d_ == b.d_);
  }
  friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

  AlgNum conjugate() const;
  std::complex<double> to_complex() const;
  /// Total order used for canonical parameter lists: rationals first by value,
  /// then surds by (d, p, q).
  static bool canonical_less(const AlgNum& a, const AlgNum& b);

 private:
  void unify(const AlgNum& o);

  Rat p_{0};
  Rat q_{0};
  Int d_{0};
};

std::string to_string(const AlgNum& a);

/// Roots of a*z^2 + b*z + c = 0 (a != 0), exact.
std::vector<AlgNum> quadratic_roots(const Rat& a, const Rat& b, const Rat& c);

}  // namespace hyper3
