#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyper3/algebra/ratfn.hpp"

namespace hyper3 {

/// numerator(L(x) - L(t)) = N(x) D(t) - N(t) D(x), held as a polynomial in x
/// whose coefficients are polynomials in t.
struct BivarQ {
  std::vector<Poly> coeffs;  // coeffs[i] multiplies x^i
  Poly specialize(const Rat& t0) const;
};

struct BadSample : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoDecomposition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BivarQ build_q(const RatFn& L);

/// Monic gcd of the two specializations at t0; throws BadSample when a
/// specialization vanishes or the gcd is constant.
Poly sample_p(const BivarQ& q1, const BivarQ& q2, const Rat& t0);

RatFn candidate_f(const Poly& p0, const Poly& p1);

/// L~ with L~(F(x)) = L(x), by undetermined coefficients.
RatFn decompose_through(const RatFn& L, const RatFn& F);

bool validate_f(const RatFn& F, const RatFn& L1, const RatFn& L2);

struct MinimizationResult {
  RatFn F;
  RatFn L1, L2;  // minimized: L_i = L~_i(F)
  std::vector<Rat> samples_used;
};

/// nullopt when no F of degree >= 2 exists (already minimal up to Moebius).
std::optional<MinimizationResult> minimize_invariants(const RatFn& L1, const RatFn& L2,
                                                      std::vector<std::string>* trace = nullptr);

}  // namespace hyper3
