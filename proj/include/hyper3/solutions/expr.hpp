#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hyper3/algebra/algnum.hpp"
#include "hyper3/algebra/integrate.hpp"
#include "hyper3/algebra/ratfn.hpp"

namespace hyper3 {

/// Closed-form solution tree. Build nodes through the factory functions,
/// which keep products flat and parameter lists canonical.
struct Expr {
  enum class Kind { Constant, Variable, Rational, Power, Product, Sum, ExpIntegral, PFQ, MeijerG };
  Kind kind = Kind::Constant;

  AlgNum value;                // Constant value; Power exponent
  RatFn fn;                    // Rational; argument of PFQ and MeijerG
  std::vector<Expr> children;  // Power: {base}; Product, Sum: terms
  IntegralForm integral;       // ExpIntegral: exp of this antiderivative
  // PFQ: upper, lower. MeijerG: a = (a_n, a_rest), b = (b_m, b_rest).
  std::vector<AlgNum> upper, lower;
  std::vector<AlgNum> a_n, a_rest, b_m, b_rest;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
};

struct UndefinedSeries : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Expr constant(const AlgNum& c);
Expr variable();
Expr rational(const RatFn& f);
/// base^exponent; exponent 0 gives 1 and exponent 1 gives base.
Expr power(const Expr& base, const AlgNum& exponent);
Expr product(const std::vector<Expr>& factors);
Expr sum(const std::vector<Expr>& terms);
Expr exp_integral(const IntegralForm& f);
/// Throws UndefinedSeries when a lower parameter is a non-positive integer.
Expr pfq(std::vector<AlgNum> upper, std::vector<AlgNum> lower, const RatFn& argument);
Expr meijerg(std::vector<AlgNum> a_n, std::vector<AlgNum> a_rest, std::vector<AlgNum> b_m,
             std::vector<AlgNum> b_rest, const RatFn& argument);

/// Cancels parameters shared between the upper and lower lists of a PFQ node,
/// and the standard pairs (a in a_n with b in b_rest, a in a_rest with b in b_m)
/// of a MeijerG node. Other nodes are returned unchanged.
Expr reduce_order(const Expr& e);

/// e with x replaced by g(x).
Expr substitute(const Expr& e, const RatFn& g);

bool contains_meijerg(const Expr& e);

std::string to_string(const Expr& e);

}  // namespace hyper3
