#include "hyper3/ode/ode.hpp"

namespace hyper3 {

Invariants invariants(const Ode3& ode) {
  const RatFn& c2 = ode.c2;
  const RatFn& c1 = ode.c1;
  const RatFn& c0 = ode.c0;
  const RatFn c2d = c2.diff();
  const RatFn c2sq = c2 * c2;
  Invariants inv;
  inv.I1 = c2d + c2sq * Rat(1, 3) - c1;
  inv.I0 = c2d.diff() * Rat(1, 3) - c2sq * c2 * Rat(2, 27) + c1 * c2 * Rat(1, 3) - c0;
  return inv;
}

NormalForm to_normal_form(const Ode3& ode) { return {invariants(ode), ode.c2 * Rat(1, 3)}; }

Ode3 normal_ode(const Invariants& inv) { return {RatFn(), -inv.I1, -inv.I0}; }

RatFn gauge_between(const RatFn& c2_a, const RatFn& c2_b) { return (c2_a - c2_b) * Rat(1, 3); }

RatFn schwarzian(const RatFn& f) {
  const RatFn d1 = f.diff();
  const RatFn q = f.diff(2) / d1;
  return f.diff(3) / d1 - q * q * Rat(3, 2);
}

Invariants transform_invariants(const Invariants& inv, const RatFn& f) {
  const RatFn d1 = f.diff();
  const RatFn d2 = d1.diff();
  const RatFn s = schwarzian(f);
  const RatFn i1f = inv.I1.compose(f);
  const RatFn i0f = inv.I0.compose(f);
  Invariants out;
  out.I1 = d1 * d1 * i1f - s * Rat(2);
  out.I0 = d1 * d2 * i1f + d1 * d1 * d1 * i0f - s.diff();
  return out;
}

Ode3 substitute_ode(const Ode3& ode, const RatFn& f) {
  const RatFn d1 = f.diff();
  const RatFn d2 = d1.diff();
  const RatFn d3 = d2.diff();
  const RatFn c2 = ode.c2.compose(f);
  const RatFn c1 = ode.c1.compose(f);
  const RatFn c0 = ode.c0.compose(f);
  const RatFn q = d2 / d1;
  Ode3 out;
  out.c2 = c2 * d1 - q * Rat(3);
  out.c1 = -c2 * d2 + q * q * Rat(3) + c1 * d1 * d1 - d3 / d1;
  out.c0 = c0 * d1 * d1 * d1;
  return out;
}

Ode3 gauge_ode(const Ode3& ode, const RatFn& w) {
  const RatFn wd = w.diff();
  const RatFn v = wd + w * w;
  Ode3 out;
  out.c2 = ode.c2 + w * Rat(3);
  out.c1 = ode.c1 + ode.c2 * w * Rat(2) + v * Rat(3);
  out.c0 = ode.c0 + ode.c1 * w + ode.c2 * v + wd.diff() + w * wd * Rat(3) + w * w * w;
  return out;
}

std::string to_string(const Ode3& ode) {
  return "y''' + (" + to_string(ode.c2) + ")*y'' + (" + to_string(ode.c1) + ")*y' + (" + to_string(ode.c0) +
         ")*y = 0";
}

}  // namespace hyper3
