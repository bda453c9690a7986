#include <gtest/gtest.h>

#include "hyper3/ode/invariants.hpp"
#include "hyper3/ode/seeds.hpp"
#include "reference_odes.hpp"
#include "test_util.hpp"

using namespace hyper3;
using namespace hyper3::testing;

namespace {

const RatFn x = RatFn::x();

Ode3 rand_ode(std::mt19937_64& rng, int deg) {
  return {rand_ratfn(rng, deg), rand_ratfn(rng, deg), rand_ratfn(rng, deg)};
}

SeedFamily rand_seed(std::mt19937_64& rng, Family f) {
  SeedFamily s{f, {}};
  for (int i = 0; i < param_count(f); ++i) s.params.emplace_back(rand_rat(rng, 7, 4));
  return s;
}

// Truncated pFq coefficients through the Pochhammer product formula.
std::vector<Rat> pochhammer_series(const std::vector<Rat>& up, const std::vector<Rat>& lo, int n) {
  auto poch = [](const Rat& a, int k) {
    Rat p(1);
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
  };
  std::vector<Rat> c;
  Rat fact(1);
  for (int k = 0; k < n; ++k) {
    if (k > 0) fact *= k;
    Rat num(1), den(fact);
    for (const auto& a : up) num *= poch(a, k);
    for (const auto& b : lo) den *= poch(b, k);
    c.push_back(num / den);
  }
  return c;
}

// Applies p3 y''' + p2 y'' + p1 y' + p0 y to a polynomial y.
Poly apply_poly_operator(const std::vector<Poly>& p, const Poly& y) {
  Poly acc;
  Poly d = y;
  for (int k = 0; k <= 3; ++k) {
    acc += p[static_cast<std::size_t>(k)] * d;
    d = d.derivative();
  }
  return acc;
}

}  // namespace

TEST(Invariants, SeedExample) {
  const Ode3 o{RatFn(3) / x, RatFn(1) / (x * x), RatFn(-1) / (x * x)};
  const Invariants inv = invariants(o);
  EXPECT_EQ(inv.I1, RatFn(-1) / (x * x));
  EXPECT_EQ(inv.I0, (x + 1) / (x * x * x));
  EXPECT_EQ(invariants(Ode3{}), Invariants{});
}

TEST(Invariants, GaugeInvariance) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 500; ++i) {
    const Ode3 o = rand_ode(rng, 2);
    const RatFn w = rand_ratfn(rng, 2);
    ASSERT_EQ(invariants(gauge_ode(o, w)), invariants(o));
  }
}

TEST(Invariants, GaugeMatchesDifferentiation) {
  // y = x^2 solves y''' = 0; after gauging by w = 1/x, u = x solves the new equation.
  const Ode3 g = gauge_ode(Ode3{}, RatFn(1) / x);
  const Poly u = Poly::x();
  const Poly u1 = u.derivative(), u2 = u1.derivative();
  const RatFn res = RatFn(u2.derivative()) + g.c2 * RatFn(u2) + g.c1 * RatFn(u1) + g.c0 * RatFn(u);
  EXPECT_TRUE(res.is_zero());
}

TEST(NormalForm, Examples) {
  const Ode3 o{RatFn(3) / x, RatFn(1) / (x * x), RatFn(-1) / (x * x)};
  const NormalForm nf = to_normal_form(o);
  EXPECT_EQ(nf.gauge_witness, RatFn(1) / x);
  EXPECT_EQ(invariants(normal_ode(nf.inv)), nf.inv);
  EXPECT_EQ(invariants(gauge_ode(o, nf.gauge_witness)).I1, nf.inv.I1);
  // gauging by c2/3 removes the second-derivative term
  EXPECT_TRUE(gauge_ode(o, -nf.gauge_witness).c2.is_zero());

  const Ode3 normal = normal_ode(nf.inv);
  EXPECT_TRUE(to_normal_form(normal).gauge_witness.is_zero());

  const NormalForm e1 = to_normal_form(example1_ode());
  EXPECT_EQ(e1.gauge_witness.den(), (x * (x + 1) * (x - 1)).num());
}

TEST(NormalForm, SelfConsistentSign) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 50; ++i) {
    const Invariants inv{rand_ratfn(rng, 3), rand_ratfn(rng, 3)};
    ASSERT_EQ(invariants(normal_ode(inv)), inv);
  }
}

TEST(GaugeBetween, Examples) {
  EXPECT_EQ(gauge_between(RatFn(3) / x, RatFn()), RatFn(1) / x);
  EXPECT_TRUE(gauge_between(x, x).is_zero());
  EXPECT_EQ(gauge_between(RatFn(), RatFn(3) / x), RatFn(-1) / x);
}

TEST(Schwarzian, MoebiusAndPowers) {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 30; ++i) EXPECT_TRUE(schwarzian(rand_moebius(rng)).is_zero());
  for (int k = 2; k <= 6; ++k) {
    EXPECT_EQ(schwarzian(x.pow(k)), RatFn(make_rat(1 - k * k, 2)) / (x * x));
  }
  EXPECT_EQ(schwarzian(x * x), RatFn(Rat(-3, 2)) / (x * x));
}

TEST(Transport, AgreesWithChainRule) {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 100; ++i) {
    const Ode3 o = rand_ode(rng, 2);
    RatFn f;
    switch (i % 3) {
      case 0:
        f = rand_moebius(rng);
        break;
      case 1:
        f = x.pow(2 + i % 4);
        break;
      default:
        do {
          f = RatFn(rand_poly_exact(rng, 2, 5), rand_poly(rng, 2, 5));
        } while (f.degree() != 2);
    }
    ASSERT_EQ(transform_invariants(invariants(o), f), invariants(substitute_ode(o, f)));
  }
}

TEST(Transport, IdentityAndMoebius) {
  std::mt19937_64 rng(113);
  const Invariants inv{rand_ratfn(rng, 3), rand_ratfn(rng, 3)};
  EXPECT_EQ(transform_invariants(inv, x), inv);
  const RatFn m = rand_moebius(rng);
  const RatFn d = m.diff();
  EXPECT_EQ(transform_invariants(inv, m).I1, d * d * inv.I1.compose(m));
}

TEST(Transport, CompositionLaw) {
  std::mt19937_64 rng(127);
  for (int i = 0; i < 40; ++i) {
    const Invariants inv{rand_ratfn(rng, 2), rand_ratfn(rng, 2)};
    const RatFn f = rand_moebius(rng);
    const RatFn g = x.pow(2 + i % 3);
    ASSERT_EQ(transform_invariants(transform_invariants(inv, f), g), transform_invariants(inv, f.compose(g)));
  }
}

TEST(JInvariants, ExamplesAndPowerRule) {
  const Invariants inv{RatFn(-1) / (x * x), (x + 1) / (x * x * x)};
  const JInv j = j_invariants(inv);
  EXPECT_TRUE(j.J1.is_zero());
  EXPECT_EQ(j.J2, x);
  EXPECT_EQ(j_invariants(Invariants{}), (JInv{RatFn(1), RatFn()}));
  EXPECT_EQ(from_j(j), inv);

  std::mt19937_64 rng(131);
  for (int k = 2; k <= 4; ++k) {
    const Invariants a{rand_ratfn(rng, 3), rand_ratfn(rng, 3)};
    const JInv ja = j_invariants(a);
    const JInv jt = j_invariants(transform_invariants(a, x.pow(k)));
    EXPECT_EQ(jt.J1, RatFn(k * k) * ja.J1.inflate(k));
    EXPECT_EQ(jt.J2, RatFn(k * k * k) * ja.J2.inflate(k));
  }
}

TEST(LProfile, RoundTrip) {
  std::mt19937_64 rng(137);
  int done = 0;
  while (done < 100) {
    const Invariants inv{rand_ratfn(rng, 4, 6), rand_ratfn(rng, 4, 6)};
    const LProfile lp = l_profile(inv);
    if (lp.status != LStatus::Ok) continue;
    const auto back = invert_l(lp.L1, lp.L2);
    ASSERT_TRUE(back.has_value());
    ASSERT_EQ(*back, inv);
    ++done;
  }
}

TEST(LProfile, GaugeIndependentAndDegenerate) {
  std::mt19937_64 rng(139);
  const Ode3 s = seed(rand_seed(rng, Family::F12));
  const LProfile a = l_profile(invariants(s));
  const LProfile b = l_profile(invariants(gauge_ode(s, rand_ratfn(rng, 2))));
  EXPECT_EQ(a.L1, b.L1);
  EXPECT_EQ(a.L2, b.L2);

  const RatFn i1 = rand_ratfn(rng, 3);
  EXPECT_EQ(l_profile(Invariants{i1, i1.diff() * Rat(1, 2)}).status, LStatus::DegenerateR);
  EXPECT_FALSE(invert_l(RatFn(3), x).has_value());
}

TEST(LProfile, CanonicalExampleInverts) {
  const Invariants inv = invariants(example2_canonical_ode());
  const LProfile lp = l_profile(inv);
  ASSERT_EQ(lp.status, LStatus::Ok);
  EXPECT_EQ(invert_l(lp.L1, lp.L2), inv);
}

TEST(LProfile, CovariantUnderRationalMaps) {
  std::mt19937_64 rng(149);
  for (Family fam : kAllFamilies) {
    const Invariants inv = invariants(seed(rand_seed(rng, fam)));
    const RatFn f = (x * x + 1) / (x + 3);
    const LProfile a = l_profile(inv);
    const LProfile b = l_profile(transform_invariants(inv, f));
    ASSERT_EQ(a.status, LStatus::Ok);
    EXPECT_EQ(b.L1, a.L1.compose(f));
    EXPECT_EQ(b.L2, a.L2.compose(f));
  }
}

TEST(Seeds, Examples) {
  const Rat al(3, 7), be(-5, 2), ga(2, 3);
  Ode3 o = seed({Family::F02, {al, be}});
  EXPECT_EQ(o.c2, RatFn(al + be + 1) / x);
  EXPECT_EQ(o.c1, RatFn(al * be) / (x * x));
  EXPECT_EQ(o.c0, RatFn(-1) / (x * x));
  o = seed({Family::F12, {al, be, ga}});
  EXPECT_EQ(o.c2, RatFn(be + ga + 1) / x);
  EXPECT_EQ(o.c1, -(x - Rat(be * ga)) / (x * x));
  EXPECT_EQ(o.c0, RatFn(-al) / (x * x));
  o = seed({Family::F32, {0, 0, 0, 0, 0}});
  EXPECT_EQ(o.c2, -(1 - 3 * x) / (x * (x - 1)));
  EXPECT_EQ(o.c1, x / (x * x * (x - 1)));
  EXPECT_TRUE(o.c0.is_zero());
}

TEST(Seeds, SeriesSolvesSeedEquation) {
  std::mt19937_64 rng(151);
  const int n = 14;
  for (Family fam : kAllFamilies) {
    for (int trial = 0; trial < 5; ++trial) {
      SeedFamily s = rand_seed(rng, fam);
      std::vector<Rat> up, lo;
      for (const auto& a : s.upper()) up.push_back(a.rational_part());
      for (const auto& b : s.lower()) lo.push_back(b.rational_part());
      if (is_integer(lo[0]) && lo[0] <= 0) continue;
      if (is_integer(lo[1]) && lo[1] <= 0) continue;
      const Ode3 o = seed(s);
      // clear denominators: multiply by x^2 (x - 1 for 3F2)
      const RatFn m = fam == Family::F32 ? x * x * (x - 1) : x * x;
      std::vector<Poly> p{(o.c0 * m).num(), (o.c1 * m).num(), (o.c2 * m).num(), m.num()};
      for (int k = 0; k < 3; ++k) ASSERT_TRUE((std::vector<RatFn>{o.c0 * m, o.c1 * m, o.c2 * m})[k].is_polynomial());
      const Poly y = Poly::from_coeffs(pochhammer_series(up, lo, n));
      const Poly res = apply_poly_operator(p, y);
      for (int k = 0; k < n - 3; ++k) ASSERT_EQ(res.coeff(k), 0) << family_name(fam) << " k=" << k;
    }
  }
}

TEST(Seeds, CanonicalOrderDescending) {
  const SeedFamily s = canonical_params({Family::F02, {Rat(1, 24), Rat(2)}});
  EXPECT_EQ(s.params[0], AlgNum(2));
  EXPECT_EQ(to_string(s), "0F2([], [2, 1/24])");
}

TEST(Singularities, Example1) {
  const SingularityProfile p = singularity_profile(invariants(example1_ode()));
  ASSERT_EQ(p.points.size(), 4u);
  EXPECT_EQ(p.points[0].point, -1);
  EXPECT_FALSE(p.points[0].regular);
  EXPECT_EQ(p.points[1].point, 0);
  EXPECT_TRUE(p.points[1].regular);
  EXPECT_EQ(p.points[2].point, 1);
  EXPECT_FALSE(p.points[2].regular);
  EXPECT_EQ(p.points[3].where, SingularPoint::Where::Infinity);
  EXPECT_TRUE(p.points[3].regular);
}

TEST(Singularities, CanonicalExample2) {
  const SingularityProfile p = singularity_profile(invariants(example2_canonical_ode()));
  ASSERT_EQ(p.points.size(), 2u);
  EXPECT_EQ(p.points[0].point, 0);
  EXPECT_FALSE(p.points[0].regular);
  EXPECT_EQ(p.points[1].point, 1);
  EXPECT_TRUE(p.points[1].regular);
  EXPECT_TRUE(singularity_profile(Invariants{}).points.empty());
}

TEST(Singularities, UnresolvedFactor) {
  const Invariants inv{RatFn(1) / (x * x + 1), RatFn()};
  const SingularityProfile p = singularity_profile(inv);
  ASSERT_TRUE(p.has_unresolved());
}
