#include "hyper3/solutions/solutions.hpp"

#include <algorithm>

namespace hyper3 {

namespace {

struct SlotSeries {
  AlgNum exponent;
  std::vector<AlgNum> upper, lower;
};

// Frobenius solutions at 0: exponent 0, then 1 - b2, then 1 - b1; each is
// x^(1-b) pFq(a + 1 - b; 1 + b' - b, 2 - b).
std::array<SlotSeries, 3> slot_series(const SeedFamily& s) {
  const auto up = s.upper();
  const auto lo = s.lower();
  auto shifted = [&](const AlgNum& b, const AlgNum& other) {
    SlotSeries out{AlgNum(1) - b, {}, {AlgNum(2) - b, AlgNum(1) + other - b}};
    for (const auto& a : up) out.upper.push_back(a + AlgNum(1) - b);
    return out;
  };
  return {SlotSeries{AlgNum(0), up, lo}, shifted(lo[1], lo[0]), shifted(lo[0], lo[1])};
}

bool undefined(const SlotSeries& s) {
  std::vector<AlgNum> up = s.upper, lo = s.lower;
  // Shared upper/lower parameters cancel before the series is formed.
  for (std::size_t i = 0; i < up.size(); ++i) {
    auto it = std::find(lo.begin(), lo.end(), up[i]);
    if (it != lo.end()) lo.erase(it);
  }
  return std::any_of(lo.begin(), lo.end(), [](const AlgNum& b) { return b.is_nonpositive_integer(); });
}

// Parameter references into the family's parameter list; -1 is the literal 0.
struct Column {
  std::vector<int> b_m, b_rest;
  bool negate_argument;
};
struct TableRow {
  std::vector<int> a_n;
  Column cols[3];
};

const TableRow& table_row(Family f) {
  static const TableRow rows[] = {
      // 3F2(alpha, beta, gamma; delta, eta)
      {{1, 0, 2}, {{{-1, 3}, {4}, false}, {{-1, 3, 4}, {}, true}, {{3, 4}, {-1}, false}}},
      // 2F2(alpha, beta; delta, gamma)
      {{1, 0}, {{{-1, 3}, {2}, false}, {{-1, 3, 2}, {}, true}, {{3, 2}, {-1}, false}}},
      // 1F2(alpha; beta, gamma)
      {{0}, {{{-1, 1}, {2}, false}, {{-1, 2, 1}, {}, true}, {{2, 1}, {-1}, false}}},
      // 0F2(alpha, beta)
      {{}, {{{-1, 0}, {1}, false}, {{-1, 0, 1}, {}, true}, {{0, 1}, {-1}, false}}},
  };
  return rows[static_cast<int>(f)];
}

}  // namespace

std::array<SlotFlag, 3> detect_special(const SeedFamily& family) {
  std::array<SlotFlag, 3> flags;
  const auto slots = slot_series(family);
  const auto lo = family.lower();
  for (int i = 0; i < 3; ++i) {
    if (undefined(slots[static_cast<std::size_t>(i)])) {
      flags[static_cast<std::size_t>(i)] = {SlotFlag::Kind::Missing, -1, "lower parameter is a non-positive integer"};
    }
  }
  auto duplicate = [&](int slot, int of, const std::string& why) {
    auto& f = flags[static_cast<std::size_t>(slot)];
    if (f.kind == SlotFlag::Kind::None) f = {SlotFlag::Kind::Duplicate, of, why};
  };
  if (lo[1] == AlgNum(1)) duplicate(1, 0, "second lower parameter is 1");
  if (lo[0] == AlgNum(1)) duplicate(2, 0, "first lower parameter is 1");
  if (lo[0] == lo[1]) duplicate(2, 1, "lower parameters coincide");
  return flags;
}

Expr meijerg_replacement(const SeedFamily& family, int slot) {
  const TableRow& row = table_row(family.family);
  const Column& col = row.cols[slot];
  auto one_minus = [&](const std::vector<int>& refs) {
    std::vector<AlgNum> out;
    for (int r : refs) out.push_back(r < 0 ? AlgNum(0) : AlgNum(1) - family.params[static_cast<std::size_t>(r)]);
    return out;
  };
  const RatFn arg = col.negate_argument ? -RatFn::x() : RatFn::x();
  return meijerg(one_minus(row.a_n), {}, one_minus(col.b_m), one_minus(col.b_rest), arg);
}

Basis seed_basis(const SeedFamily& family) {
  Basis b;
  b.family = family;
  b.flags = detect_special(family);
  const auto slots = slot_series(family);
  for (std::size_t i = 0; i < 3; ++i) {
    if (b.flags[i].kind == SlotFlag::Kind::None) {
      const auto& s = slots[i];
      b.elements[i] =
          product({power(variable(), s.exponent), reduce_order(pfq(s.upper, s.lower, RatFn::x()))});
    } else {
      b.elements[i] = reduce_order(meijerg_replacement(family, static_cast<int>(i)));
      b.meijerg[i] = true;
    }
  }
  return b;
}

RatFn TransformChain::map() const {
  RatFn m = moebius.as_ratfn().compose(RatFn::x().inflate(k));
  if (rational) m = m.compose(*rational);
  return m;
}

Expr gauge_factor(const RatFn& w) {
  if (w.is_zero()) return constant(1);
  IntegralForm f = integrate_rational(w);
  std::vector<Expr> factors;
  for (const auto& t : f.log_terms) factors.push_back(power(rational(RatFn(t.argument)), t.residue));
  f.log_terms.clear();
  if (!f.rational_part.is_zero() || f.remainder) factors.push_back(exp_integral(f));
  return product(factors);
}

Basis apply_chain(const Basis& basis, const TransformChain& chain) {
  Basis out = basis;
  const RatFn g = chain.map();
  const Expr p = gauge_factor(chain.gauge);
  for (std::size_t i = 0; i < 3; ++i) out.elements[i] = product({p, substitute(basis.elements[i], g)});
  return out;
}

}  // namespace hyper3
