#include "hyper3/ode/invariants.hpp"

#include <algorithm>
#include <tuple>

namespace hyper3 {

JInv j_invariants(const Invariants& inv) {
  const RatFn x = RatFn::x();
  const RatFn x2 = x * x;
  return {x2 * inv.I1 + 1, x2 * x * inv.I0 + x2 * inv.I1};
}

Invariants from_j(const JInv& j) {
  const RatFn x = RatFn::x();
  const RatFn x2 = x * x;
  return {(j.J1 - 1) / x2, (j.J2 - j.J1 + 1) / (x2 * x)};
}

LProfile l_profile(const Invariants& inv) {
  LProfile out;
  const RatFn& I1 = inv.I1;
  const RatFn dI1 = I1.diff();
  out.r = dI1 - inv.I0 * Rat(2);
  if (out.r.is_zero()) {
    out.status = LStatus::DegenerateR;
    return out;
  }
  const RatFn& r = out.r;
  const RatFn r1 = r.diff();
  const RatFn r2 = r1.diff();
  const RatFn r3 = r2.diff();
  const RatFn rsq = r * r;
  const RatFn base = r * r2 * Rat(6) + I1 * rsq * Rat(9) - r1 * r1 * Rat(7);
  const RatFn r4 = rsq * rsq;
  out.L1 = base.pow(3) / (r4 * r4);
  out.L2 = (dI1 * rsq * r * Rat(27) - I1 * rsq * r1 * Rat(18) + r1 * r1 * r1 * Rat(56) - r2 * r1 * r * Rat(72) +
            r3 * rsq * Rat(18)) /
           r4;
  const RatFn dL1 = out.L1.diff();
  if (dL1.is_zero() || out.L2.is_zero()) {
    out.status = LStatus::DegenerateL;
    return out;
  }
  out.s = out.L2 * out.L1 / dL1;
  out.t = out.L1 / out.s->pow(3);
  return out;
}

std::optional<Invariants> invert_l(const RatFn& L1, const RatFn& L2) {
  const RatFn dL1 = L1.diff();
  if (dL1.is_zero() || L2.is_zero() || L1.is_zero()) return std::nullopt;
  const RatFn s = L2 * L1 / dL1;
  const RatFn t = L1 / s.pow(3);
  const RatFn t1 = t.diff();
  const RatFn t2 = t1.diff();
  const RatFn t3 = t2.diff();
  const RatFn tsq = t * t;
  const RatFn tcu = tsq * t;
  Invariants inv;
  inv.I1 = (s * tcu - t2 * t * Rat(6) + t1 * t1 * Rat(7)) / (tsq * Rat(9));
  inv.I0 = ((s.diff() - 9) * tsq * tsq + t1 * s * tcu - t3 * tsq * Rat(6) + t2 * t1 * t * Rat(20) -
            t1 * t1 * t1 * Rat(14)) /
           (tcu * Rat(18));
  return inv;
}

int SingularityProfile::count_regular() const {
  return static_cast<int>(std::count_if(points.begin(), points.end(), [](const SingularPoint& p) { return p.regular; }));
}

int SingularityProfile::count_irregular() const { return static_cast<int>(points.size()) - count_regular(); }

bool SingularityProfile::has_unresolved() const {
  return std::any_of(points.begin(), points.end(),
                     [](const SingularPoint& p) { return p.where == SingularPoint::Where::Unresolved; });
}

std::pair<int, int> pole_orders(const Invariants& inv, const Rat& x0) {
  return {std::max(0, -order_at(inv.I1, x0)), std::max(0, -order_at(inv.I0, x0))};
}

Invariants at_infinity(const Invariants& inv) { return transform_invariants(inv, RatFn(1) / RatFn::x()); }

namespace {

int multiplicity_in(const Poly& factor, Poly p) {
  int m = 0;
  while (p.degree() >= factor.degree() && divides(factor, p)) {
    p = exact_div(p, factor);
    ++m;
  }
  return m;
}

bool is_regular(int p1, int p0) { return p1 <= 2 && p0 <= 3; }

}  // namespace

SingularityProfile singularity_profile(const Invariants& inv) {
  SingularityProfile prof;
  const Poly den = inv.I1.den() * inv.I0.den();
  std::vector<SingularPoint> unresolved;
  for (const auto& f : squarefree_and_rational_roots(den)) {
    SingularPoint p;
    if (f.linear) {
      p.where = SingularPoint::Where::Finite;
      p.point = f.root;
      std::tie(p.pole_I1, p.pole_I0) = pole_orders(inv, f.root);
      p.regular = is_regular(p.pole_I1, p.pole_I0);
      prof.points.push_back(p);
    } else {
      p.where = SingularPoint::Where::Unresolved;
      p.factor = f.factor;
      p.pole_I1 = multiplicity_in(f.factor, inv.I1.den());
      p.pole_I0 = multiplicity_in(f.factor, inv.I0.den());
      p.regular = is_regular(p.pole_I1, p.pole_I0);
      unresolved.push_back(p);
    }
  }
  prof.points.insert(prof.points.end(), unresolved.begin(), unresolved.end());
  const auto [p1, p0] = pole_orders(at_infinity(inv), Rat(0));
  if (p1 > 0 || p0 > 0) {
    SingularPoint p;
    p.where = SingularPoint::Where::Infinity;
    p.pole_I1 = p1;
    p.pole_I0 = p0;
    p.regular = is_regular(p1, p0);
    prof.points.push_back(p);
  }
  return prof;
}

std::string to_string(const SingularPoint& p) {
  std::string where;
  switch (p.where) {
    case SingularPoint::Where::Finite:
      where = to_string(p.point);
      break;
    case SingularPoint::Where::Infinity:
      where = "infinity";
      break;
    case SingularPoint::Where::Unresolved:
      where = "root of " + to_string(p.factor);
      break;
  }
  return where + (p.regular ? ": regular" : ": irregular") + " (pole orders " + std::to_string(p.pole_I1) + ", " +
         std::to_string(p.pole_I0) + ")";
}

}  // namespace hyper3
