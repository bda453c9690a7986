#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyper3/ode/ode.hpp"

namespace hyper3 {

/// Shifted invariants with the scaling law J1 -> k^2 J1(x^k), J2 -> k^3 J2(x^k).
struct JInv {
  RatFn J1, J2;
  friend bool operator==(const JInv& a, const JInv& b) { return a.J1 == b.J1 && a.J2 == b.J2; }
};

JInv j_invariants(const Invariants& inv);
Invariants from_j(const JInv& j);

enum class LStatus { Ok, DegenerateR, DegenerateL };

/// Relative invariant r and absolute invariants L1, L2; s and t are present
/// when status is Ok.
struct LProfile {
  LStatus status = LStatus::Ok;
  RatFn r, L1, L2;
  std::optional<RatFn> s, t;
};

LProfile l_profile(const Invariants& inv);

/// Recovers the invariants from (L1, L2); nullopt when L1 is constant or
/// s, t are undefined.
std::optional<Invariants> invert_l(const RatFn& L1, const RatFn& L2);

struct SingularPoint {
  enum class Where { Finite, Infinity, Unresolved };
  Where where = Where::Finite;
  Rat point;     // Finite only
  Poly factor;   // Unresolved only: monic irreducible-over-Q-roots factor
  bool regular = true;
  int pole_I1 = 0;
  int pole_I0 = 0;
};

struct SingularityProfile {
  std::vector<SingularPoint> points;
  int count_regular() const;
  int count_irregular() const;
  bool has_unresolved() const;
};

/// Pole orders of the invariants at a rational point.
std::pair<int, int> pole_orders(const Invariants& inv, const Rat& x0);
/// Invariants transported through x -> 1/x (local data at infinity at 0).
Invariants at_infinity(const Invariants& inv);

SingularityProfile singularity_profile(const Invariants& inv);

std::string to_string(const SingularPoint& p);

}  // namespace hyper3
