#pragma once

#include <string>

#include "hyper3/algebra/ratfn.hpp"

namespace hyper3 {

/// y''' + c2 y'' + c1 y' + c0 y = 0
struct Ode3 {
  RatFn c2, c1, c0;
  friend bool operator==(const Ode3& a, const Ode3& b) {
    return a.c2 == b.c2 && a.c1 == b.c1 && a.c0 == b.c0;
  }
};

/// The gauge-invariant pair; the normal form is y''' = I1 y' + I0 y.
struct Invariants {
  RatFn I1, I0;
  friend bool operator==(const Invariants& a, const Invariants& b) { return a.I1 == b.I1 && a.I0 == b.I0; }
  friend bool operator!=(const Invariants& a, const Invariants& b) { return !(a == b); }
};

Invariants invariants(const Ode3& ode);

struct NormalForm {
  Invariants inv;
  RatFn gauge_witness;  // c2/3
};

NormalForm to_normal_form(const Ode3& ode);
/// The ODE y''' = I1 y' + I0 y.
Ode3 normal_ode(const Invariants& inv);

/// (c2_a - c2_b)/3
RatFn gauge_between(const RatFn& c2_a, const RatFn& c2_b);

RatFn schwarzian(const RatFn& f);

/// Invariants of the equation satisfied by y(F(x)).
Invariants transform_invariants(const Invariants& inv, const RatFn& f);

/// Chain-rule substitution: the ODE satisfied by Y(x) = y(F(x)).
Ode3 substitute_ode(const Ode3& ode, const RatFn& f);
/// The ODE satisfied by u where y = exp(int w) u.
Ode3 gauge_ode(const Ode3& ode, const RatFn& w);

std::string to_string(const Ode3& ode);

}  // namespace hyper3
