#include <numeric>

#include "hyper3/equiv/equiv.hpp"

namespace hyper3 {

RatFn Moebius::as_ratfn() const { return RatFn(Poly::from_coeffs({b, a}), Poly::from_coeffs({d, c})); }

Moebius Moebius::inverse() const { return {d, -b, -c, a}; }

JInv depower(const JInv& j, int k) {
  if (k == 1) return j;
  const Rat k2(k * k), k3(k * k * k);
  return {j.J1.deflate(k) * RatFn(Rat(1) / k2), j.J2.deflate(k) * RatFn(Rat(1) / k3)};
}

std::optional<PowerMinimized> power_minimize(const JInv& j) {
  const int g = std::gcd(exponent_support_gcd(j.J1), exponent_support_gcd(j.J2));
  if (g == 0) return std::nullopt;
  return PowerMinimized{g, depower(j, g)};
}

}  // namespace hyper3
