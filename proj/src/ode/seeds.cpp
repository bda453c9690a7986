#include "hyper3/ode/seeds.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyper3 {

int upper_count(Family f) {
  switch (f) {
    case Family::F32:
      return 3;
    case Family::F22:
      return 2;
    case Family::F12:
      return 1;
    case Family::F02:
      return 0;
  }
  return 0;
}

int param_count(Family f) { return upper_count(f) + 2; }

std::string family_name(Family f) { return std::to_string(upper_count(f)) + "F2"; }

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<AlgNum> SeedFamily::upper() const {
  return {params.begin(), params.begin() + upper_count(family)};
}

std::vector<AlgNum> SeedFamily::lower() const {
  return {params.begin() + upper_count(family), params.end()};
}

namespace {

Rat rational_or_throw(const AlgNum& a) {
  if (!a.is_rational()) throw std::domain_error("seed parameters must have rational symmetric functions");
  return a.rational_part();
}

}  // namespace

SeedSymmetric symmetric_functions(const SeedFamily& s) {
  if (static_cast<int>(s.params.size()) != param_count(s.family)) {
    throw std::invalid_argument("wrong number of parameters for " + family_name(s.family));
  }
  SeedSymmetric out;
  out.family = s.family;
  const auto up = s.upper();
  const auto lo = s.lower();
  AlgNum e1, e2, e3;
  for (std::size_t i = 0; i < up.size(); ++i) {
    e1 += up[i];
    for (std::size_t j = i + 1; j < up.size(); ++j) {
      e2 += up[i] * up[j];
      for (std::size_t k = j + 1; k < up.size(); ++k) e3 += up[i] * up[j] * up[k];
    }
  }
  out.e1 = rational_or_throw(e1);
  out.e2 = rational_or_throw(e2);
  out.e3 = rational_or_throw(e3);
  out.lower_sum = rational_or_throw(lo[0] + lo[1]);
  out.lower_prod = rational_or_throw(lo[0] * lo[1]);
  return out;
}

Ode3 seed_from_symmetric(const SeedSymmetric& s) {
  const RatFn x = RatFn::x();
  const RatFn x2 = x * x;
  const RatFn sp1(s.lower_sum + 1);
  const RatFn p(s.lower_prod);
  Ode3 o;
  switch (s.family) {
    case Family::F02:
      o.c2 = sp1 / x;
      o.c1 = p / x2;
      o.c0 = RatFn(-1) / x2;
      break;
    case Family::F12:
      o.c2 = sp1 / x;
      o.c1 = (p - x) / x2;
      o.c0 = RatFn(-s.e1) / x2;
      break;
    case Family::F22:
      o.c2 = (sp1 - x) / x;
      o.c1 = (p - x * RatFn(s.e1 + 1)) / x2;
      o.c0 = RatFn(-s.e2) / x2;
      break;
    case Family::F32: {
      const RatFn xm1 = x - 1;
      o.c2 = (x * RatFn(s.e1 + 3) - sp1) / (x * xm1);
      o.c1 = (x * RatFn(1 + s.e1 + s.e2) - p) / (x2 * xm1);
      o.c0 = RatFn(s.e3) / (x2 * xm1);
      break;
    }
  }
  return o;
}

Ode3 seed(const SeedFamily& s) { return seed_from_symmetric(symmetric_functions(s)); }

namespace {

bool descending(const AlgNum& a, const AlgNum& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  if (a.is_rational()) return a.rational_part() > b.rational_part();
  return AlgNum::canonical_less(a, b);
}

}  // namespace

void canonical_sort(std::vector<AlgNum>& params) { std::sort(params.begin(), params.end(), descending); }

SeedFamily canonical_params(SeedFamily s) {
  const auto uc = static_cast<std::ptrdiff_t>(upper_count(s.family));
  std::sort(s.params.begin(), s.params.begin() + uc, descending);
  std::sort(s.params.begin() + uc, s.params.end(), descending);
  return s;
}

std::string to_string(const SeedFamily& s) {
  std::string out = family_name(s.family) + "([";
  const auto up = s.upper();
  const auto lo = s.lower();
  for (std::size_t i = 0; i < up.size(); ++i) out += (i ? ", " : "") + to_string(up[i]);
  out += "], [";
  for (std::size_t i = 0; i < lo.size(); ++i) out += (i ? ", " : "") + to_string(lo[i]);
  return out + "])";
}

}  // namespace hyper3
