#include <gtest/gtest.h>

#include "hyper3/equiv/equiv.hpp"
#include "hyper3/ratmin/ratmin.hpp"
#include "reference_odes.hpp"
#include "test_util.hpp"

using namespace hyper3;
using namespace hyper3::testing;

namespace {

const RatFn x = RatFn::x();
const Poly px = Poly::x();

Poly pt(std::initializer_list<long> ascending) {
  std::vector<Rat> c;
  for (long v : ascending) c.emplace_back(v);
  return Poly::from_coeffs(c);
}

// Direct expansion of N(x) D(t) - N(t) D(x) evaluated at (x0, t0).
Rat q_value(const RatFn& L, const Rat& x0, const Rat& t0) {
  return L.num().eval(x0) * L.den().eval(t0) - L.num().eval(t0) * L.den().eval(x0);
}

Rat q_eval(const BivarQ& q, const Rat& x0, const Rat& t0) { return q.specialize(t0).eval(x0); }

RatFn rand_map(std::mt19937_64& rng, int degree) {
  while (true) {
    const RatFn f(rand_poly_exact(rng, degree, 5), rand_poly(rng, degree, 5));
    if (f.degree() == degree) return f;
  }
}

SeedFamily rand_seed(std::mt19937_64& rng, Family f) {
  SeedFamily s{f, {}};
  for (int i = 0; i < param_count(f); ++i) {
    Rat r;
    do {
      r = rand_rat(rng, 9, 6);
    } while (is_integer(r));
    s.params.emplace_back(r);
  }
  return s;
}

}  // namespace

TEST(BuildQ, Examples) {
  const BivarQ q = build_q(x.pow(2));
  ASSERT_EQ(q.coeffs.size(), 3u);
  EXPECT_EQ(q.coeffs[0], pt({0, 0, -1}));
  EXPECT_EQ(q.coeffs[1], Poly());
  EXPECT_EQ(q.coeffs[2], pt({1}));
  const BivarQ q4 = build_q(x.pow(4));
  EXPECT_EQ(q4.coeffs[0], pt({0, 0, 0, 0, -1}));
  EXPECT_EQ(q4.coeffs[4], pt({1}));
  // (x^2+1)/x: (x^2+1) t - (t^2+1) x
  const BivarQ q2 = build_q((x.pow(2) + RatFn(1)) / x);
  EXPECT_EQ(q2.coeffs[0], pt({0, 1}));
  EXPECT_EQ(q2.coeffs[1], pt({-1, 0, -1}));
  EXPECT_EQ(q2.coeffs[2], pt({0, 1}));
}

TEST(BuildQ, MatchesExpansionAndAntisymmetry) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const RatFn L = rand_ratfn(rng, 4);
    if (L.is_constant()) continue;
    const BivarQ q = build_q(L);
    for (int k = 0; k < 4; ++k) {
      const Rat a = rand_rat(rng), b = rand_rat(rng);
      EXPECT_EQ(q_eval(q, a, b), q_value(L, a, b));
      EXPECT_EQ(q_eval(q, a, b), -q_eval(q, b, a));
    }
  }
}

TEST(SampleP, Examples) {
  EXPECT_EQ(sample_p(build_q(x.pow(4)), build_q(x.pow(6)), Rat(2)), pt({-4, 0, 1}));
  EXPECT_EQ(sample_p(build_q(x.pow(2)), build_q(x.pow(3)), Rat(2)), pt({-2, 1}));
  EXPECT_EQ(sample_p(build_q(x), build_q(x), Rat(5)), pt({-5, 1}));
}

TEST(CandidateF, Examples) {
  EXPECT_EQ(candidate_f(pt({-4, 0, 1}), pt({-9, 0, 1})), RatFn(pt({-4, 0, 1}), pt({-9, 0, 1})));
  EXPECT_EQ(candidate_f(pt({-2, 1}), pt({-3, 1})).degree(), 1);
  const RatFn same = candidate_f(pt({-2, 1}), pt({-2, 1}));
  EXPECT_TRUE(same.is_constant());
  EXPECT_FALSE(validate_f(same, x.pow(4), x.pow(6)));
}

TEST(ValidateF, Examples) {
  const RatFn f = RatFn(pt({-4, 0, 1}), pt({-9, 0, 1}));
  EXPECT_TRUE(validate_f(f, x.pow(4), x.pow(6)));
  EXPECT_FALSE(validate_f(x.pow(2), x.pow(3), x.pow(4)));
  EXPECT_FALSE(validate_f(RatFn(1), x.pow(4), x.pow(6)));
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose_through(x.pow(4), x.pow(2)), x.pow(2));
  EXPECT_THROW(decompose_through(x.pow(3) + x, x.pow(2)), NoDecomposition);
  EXPECT_THROW(decompose_through(x.pow(4) + x, x.pow(2)), NoDecomposition);
}

TEST(Decompose, ForwardComposeOracle) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const RatFn l0 = rand_map(rng, 1 + static_cast<int>(rng() % 3));
    const RatFn f0 = rand_map(rng, 1 + static_cast<int>(rng() % 3));
    const RatFn L = l0.compose(f0);
    const RatFn lt = decompose_through(L, f0);
    EXPECT_EQ(lt.compose(f0), L);
  }
}

TEST(Minimize, PowerPair) {
  const auto r = minimize_invariants(x.pow(4), x.pow(6));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->F.degree(), 2);
  EXPECT_EQ(r->L1.degree(), 2);
  EXPECT_EQ(r->L2.degree(), 3);
  EXPECT_EQ(r->L1.compose(r->F), x.pow(4));
  EXPECT_EQ(r->L2.compose(r->F), x.pow(6));
  EXPECT_FALSE(minimize_invariants(r->L1, r->L2));
}

TEST(Minimize, SeedIsAlreadyMinimal) {
  const LProfile lp = l_profile(seed_invariants({Family::F12, {Rat(1, 3), Rat(2, 5), Rat(-3, 7)}}));
  ASSERT_EQ(lp.status, LStatus::Ok);
  EXPECT_FALSE(minimize_invariants(lp.L1, lp.L2));
}

TEST(Minimize, Example2) {
  const Invariants inv = invariants(example2_ode());
  const LProfile lp = l_profile(inv);
  ASSERT_EQ(lp.status, LStatus::Ok);
  std::vector<std::string> trace;
  const auto r = minimize_invariants(lp.L1, lp.L2, &trace);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->F.degree(), 2);
  const auto canon = invert_l(r->L1, r->L2);
  ASSERT_TRUE(canon);
  EXPECT_EQ(transform_invariants(*canon, r->F), inv);
  // Moebius-equivalent to the canonical equation with a 1F2 solution.
  const EquivResult e = equiv_power_moebius(*canon);
  ASSERT_FALSE(e.matches.empty());
  EXPECT_EQ(e.matches[0].family.family, Family::F12);
  EXPECT_EQ(e.matches[0].family.lower(), (std::vector<AlgNum>{Rat(1), Rat(1)}));
  // The reference representative x^2/(1+x) differs from F by a Moebius map.
  const RatFn ref = x.pow(2) / (RatFn(1) + x);
  EXPECT_EQ(decompose_through(r->F, ref).degree(), 1);
  EXPECT_FALSE(minimize_invariants(r->L1, r->L2));
}

TEST(Minimize, MoebiusGaugeFreedom) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const LProfile lp = l_profile(seed_invariants(rand_seed(rng, kAllFamilies[i % 4])));
    if (lp.status != LStatus::Ok) continue;
    const RatFn f = rand_map(rng, 2);
    const RatFn L1 = lp.L1.compose(f), L2 = lp.L2.compose(f);
    const auto a = minimize_invariants(L1, L2);
    ASSERT_TRUE(a);
    const RatFn m = rand_moebius(rng);
    const auto b = minimize_invariants(L1.compose(m), L2.compose(m));
    ASSERT_TRUE(b);
    // b.F = N(a.F(m)) for a Moebius N, so b.L_i(N) = a.L_i.
    const RatFn n = decompose_through(b->F, a->F.compose(m));
    ASSERT_EQ(n.degree(), 1);
    EXPECT_EQ(b->L1.compose(n), a->L1);
    EXPECT_EQ(b->L2.compose(n), a->L2);
  }
}

TEST(Minimize, PlantedDegreeFuzz) {
  std::mt19937_64 rng(100);
  int done = 0;
  for (int i = 0; done < 100; ++i) {
    const LProfile lp = l_profile(seed_invariants(rand_seed(rng, kAllFamilies[i % 4])));
    if (lp.status != LStatus::Ok) continue;
    const int d = 2 + static_cast<int>(rng() % 3);
    const RatFn f = rand_map(rng, d);
    const RatFn L1 = lp.L1.compose(f), L2 = lp.L2.compose(f);
    const auto r = minimize_invariants(L1, L2);
    ASSERT_TRUE(r) << "case " << i;
    EXPECT_EQ(r->F.degree(), d) << "case " << i;
    EXPECT_EQ(r->L1.compose(r->F), L1);
    EXPECT_EQ(r->L2.compose(r->F), L2);
    EXPECT_EQ(r->L1.degree() * r->F.degree(), L1.degree());
    EXPECT_EQ(r->L2.degree() * r->F.degree(), L2.degree());
    ++done;
  }
}
