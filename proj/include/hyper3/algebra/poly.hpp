#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "hyper3/algebra/rat.hpp"

namespace hyper3 {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Univariate polynomial over Q.
///
/// Stored as content * primitive part: the primitive part is an integer
/// coefficient vector (ascending exponents) with gcd 1 and positive leading
/// coefficient, so equality is structural. The sparse view used by the
/// exponent-lattice code is available through terms() and support_gcd().
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly x();
  static Poly monomial(const Rat& c, int exponent);
  static Poly from_coeffs(const std::vector<Rat>& ascending);
  static Poly from_integers(std::vector<Int> ascending);

  int degree() const { return static_cast<int>(prim_.size()) - 1; }
  bool is_zero() const { return prim_.empty(); }
  bool is_constant() const { return prim_.size() <= 1; }

  Rat coeff(int i) const;
  Rat leading() const;
  /// content() * primitive() == *this; content is zero only for the zero polynomial.
  const Rat& content() const { return content_; }
  const std::vector<Int>& primitive() const { return prim_; }

  /// Nonzero terms, exponent descending.
  std::vector<std::pair<int, Rat>> terms() const;
  /// gcd of the exponents of the nonzero terms; 0 for constants.
  int support_gcd() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.content_ == b.content_ && a.prim_ == b.prim_;
  }

  Poly derivative() const;
  Poly monic() const;
  Poly primitive_part() const;
  Poly pow(unsigned n) const;
  /// p(q(x))
  Poly compose(const Poly& q) const;
  /// p(x^k)
  Poly inflate(int k) const;
  /// p(x^(1/k)); requires support_gcd divisible by k.
  Poly deflate(int k) const;
  /// p(x + a)
  Poly shift(const Rat& a) const;

  Rat eval(const Rat& t) const;
  std::complex<double> eval(std::complex<double> t) const;
  std::complex<long double> eval(std::complex<long double> t) const;

 private:
  void normalize_from(std::vector<Int> ints, const Rat& scale);

  Rat content_{0};
  std::vector<Int> prim_;
};

std::string to_string(const Poly& p);

/// Quotient and remainder over Q; throws std::domain_error on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b, throwing std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);

/// Monic gcd (zero only when both inputs are zero). Modular algorithm with
/// trial-division certification.
Poly poly_gcd(const Poly& a, const Poly& b);
/// Plain Euclidean gcd over Q, kept as an independent reference.
Poly poly_gcd_euclid(const Poly& a, const Poly& b);

/// s*a + t*b = c with deg s < deg b; requires gcd(a, b) | c.
std::pair<Poly, Poly> solve_diophantine(const Poly& a, const Poly& b, const Poly& c);

/// Resultant over Q.
Rat resultant(const Poly& a, const Poly& b);

/// Squarefree decomposition p = lc * prod f_i^i (Yun); factors monic.
std::vector<std::pair<Poly, int>> squarefree(const Poly& p);

/// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const Poly& p);

struct FactorEntry {
  Poly factor;      // monic
  int multiplicity;
  bool linear;      // factor == x - root
  Rat root;         // valid when linear
};

/// Squarefree split with every rational root exposed as a linear factor.
/// Non-linear factors are squarefree, root-free over Q and pairwise coprime.
std::vector<FactorEntry> squarefree_and_rational_roots(const Poly& p);

/// Complex roots (Aberth iteration, long double), any order.
std::vector<std::complex<long double>> numeric_roots(const Poly& p);

}  // namespace hyper3
