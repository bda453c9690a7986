#include <gtest/gtest.h>

#include "hyper3/equiv/equiv.hpp"
#include "reference_odes.hpp"
#include "test_util.hpp"

using namespace hyper3;
using namespace hyper3::testing;

namespace {

const RatFn x = RatFn::x();

Rat non_integer(std::mt19937_64& rng) {
  while (true) {
    const Rat r = rand_rat(rng, 9, 6);
    if (!is_integer(r)) return r;
  }
}

SeedFamily rand_seed(std::mt19937_64& rng, Family f) {
  SeedFamily s{f, {}};
  for (int i = 0; i < param_count(f); ++i) s.params.emplace_back(non_integer(rng));
  return canonical_params(s);
}

Moebius rand_moebius_map(std::mt19937_64& rng) {
  while (true) {
    Moebius m{rand_rat(rng, 5, 3), rand_rat(rng, 5, 3), rand_rat(rng, 5, 3), rand_rat(rng, 5, 3)};
    if (m.a * m.d - m.b * m.c != 0) return m;
  }
}

bool contains(const EquivResult& r, const SeedFamily& s, const RatFn& map) {
  for (const auto& m : r.matches) {
    if (m.family == s && m.map == map) return true;
  }
  return false;
}

void expect_all_verified(const EquivResult& r, const Invariants& inv) {
  for (const auto& m : r.matches) {
    EXPECT_EQ(transform_invariants(seed_invariants(m.family), m.map), inv) << to_string(m.family);
    EXPECT_EQ(m.moebius.as_ratfn().compose(x.inflate(m.k)), m.map);
  }
}

std::string describe(const EquivResult& r) {
  std::string s = r.failed_stage + ": " + r.reason;
  for (const auto& t : r.trace) s += "\n  " + t;
  return s;
}

}  // namespace

TEST(PowerMinimize, Example1HasPowerTwo) {
  const auto pm = power_minimize(j_invariants(invariants(example1_ode())));
  ASSERT_TRUE(pm);
  EXPECT_EQ(pm->k, 2);
  EXPECT_EQ(pm->minimized, j_invariants(invariants(example1_depowered_ode())));
}

TEST(PowerMinimize, InflateThenMinimize) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Invariants inv = seed_invariants(rand_seed(rng, Family::F12));
    const JInv j = j_invariants(inv);
    const int k = 2 + i % 4;
    const JInv inflated{j.J1.inflate(k) * RatFn(Rat(k * k)), j.J2.inflate(k) * RatFn(Rat(k * k * k))};
    EXPECT_EQ(inflated, j_invariants(transform_invariants(inv, x.inflate(k))));
    const auto pm = power_minimize(inflated);
    ASSERT_TRUE(pm);
    EXPECT_EQ(pm->k % k, 0);
    EXPECT_EQ(depower(inflated, k), j);
  }
}

TEST(PowerMinimize, ConstantJ) {
  // y''' = y has J1 = 1 and J2 = x^3.
  const Invariants inv{RatFn(Rat(0)), RatFn(Rat(1))};
  const auto pm = power_minimize(j_invariants(inv));
  ASSERT_TRUE(pm);
  EXPECT_EQ(pm->k, 3);
  const Invariants cauchy_euler{RatFn(Rat(2)) / x.pow(2), RatFn(Rat(5)) / x.pow(3)};
  EXPECT_FALSE(power_minimize(j_invariants(cauchy_euler)));
  EXPECT_TRUE(equiv_power_moebius(cauchy_euler).both_constant);
}

TEST(Classify, ShippedTableMatchesGenerator) {
  EXPECT_EQ(render_signature_table(generate_signature_table(20240611, 12, 6)),
            render_signature_table(signature_table()));
}

TEST(Classify, SeedsClassifyAsThemselves) {
  std::mt19937_64 rng(5);
  for (Family f : kAllFamilies) {
    for (int i = 0; i < 10; ++i) {
      const auto prof = singularity_profile(seed_invariants(rand_seed(rng, f)));
      const auto fs = classify(prof);
      EXPECT_NE(std::find(fs.begin(), fs.end(), f), fs.end()) << family_name(f);
    }
  }
}

TEST(Classify, Example1Depowered) {
  const auto fs = classify(singularity_profile(invariants(example1_depowered_ode())));
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0], Family::F02);
}

TEST(IndicialRoots, SeedAtZero) {
  // 0F2 with lower b1, b2 has exponents {0, 1-b1, 1-b2} before normalization;
  // the normal form shifts all three equally.
  const SeedFamily s{Family::F02, {Rat(1, 2), Rat(1, 3)}};
  const auto r = indicial_roots(seed_invariants(s), Rat(0));
  ASSERT_EQ(r.size(), 3u);
  std::vector<Rat> v;
  for (const auto& a : r) v.push_back(a.rational_part());
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v[1] - v[0], Rat(1, 2));
  EXPECT_EQ(v[2] - v[0], Rat(2, 3));
}

TEST(Equiv, Example1) {
  const Invariants inv = invariants(example1_ode());
  const EquivResult r = equiv_power_moebius(inv);
  ASSERT_FALSE(r.matches.empty()) << describe(r);
  expect_all_verified(r, inv);
  const SeedFamily expected{Family::F02, {Rat(2), Rat(1, 24)}};
  const RatFn map = RatFn(Poly::monomial(Rat(2), 2), Poly::from_coeffs({Rat(-1), Rat(0), Rat(1)}));
  EXPECT_TRUE(contains(r, expected, map)) << describe(r);
  EXPECT_EQ(r.matches[0].k, 2);
}

TEST(Equiv, Example1Depowered) {
  const Invariants inv = invariants(example1_depowered_ode());
  const EquivResult r = equiv_power_moebius(inv);
  ASSERT_FALSE(r.matches.empty()) << describe(r);
  expect_all_verified(r, inv);
  EXPECT_EQ(r.matches[0].k, 1);
  const RatFn map = RatFn(Poly::monomial(Rat(2), 1), Poly::from_coeffs({Rat(-1), Rat(1)}));
  EXPECT_TRUE(contains(r, SeedFamily{Family::F02, {Rat(2), Rat(1, 24)}}, map)) << describe(r);
  // Parameter sets differing by integer shifts of the exponents are all reported.
  EXPECT_EQ(r.matches.size(), 3u);
}

TEST(Equiv, Example2Canonical) {
  const Invariants inv = invariants(example2_canonical_ode());
  const EquivResult r = equiv_power_moebius(inv);
  ASSERT_FALSE(r.matches.empty()) << describe(r);
  expect_all_verified(r, inv);
  for (const auto& m : r.matches) {
    EXPECT_EQ(m.family.family, Family::F12);
    EXPECT_EQ(m.family.lower(), (std::vector<AlgNum>{Rat(1), Rat(1)}));
  }
}

TEST(Equiv, TwoF2UnderDegreeFiveMap) {
  const SeedFamily s = canonical_params({Family::F22, {Rat(1, 2), Rat(1, 3), Rat(2, 5), Rat(3, 4)}});
  const Moebius m{Rat(3), Rat(1), Rat(1), Rat(-2)};
  const RatFn map = m.as_ratfn().compose(x.inflate(5));
  const Invariants inv = transform_invariants(seed_invariants(s), map);
  const EquivResult r = equiv_power_moebius(inv);
  ASSERT_FALSE(r.matches.empty()) << describe(r);
  expect_all_verified(r, inv);
  EXPECT_TRUE(contains(r, s, map)) << describe(r);
  EXPECT_EQ(r.matches[0].k, 5);
}

TEST(Equiv, RandomRoundTrip) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const Family f = kAllFamilies[i % 4];
    const SeedFamily s = rand_seed(rng, f);
    const int k = 1 + static_cast<int>(rng() % 3);
    const RatFn map = rand_moebius_map(rng).as_ratfn().compose(x.inflate(k));
    const Invariants inv = transform_invariants(seed_invariants(s), map);
    const EquivResult r = equiv_power_moebius(inv);
    ASSERT_FALSE(r.matches.empty()) << "case " << i << " " << to_string(s) << " map " << to_string(map) << "\n"
                                    << describe(r);
    expect_all_verified(r, inv);
    EXPECT_TRUE(contains(r, s, map)) << "case " << i << " " << to_string(s) << " map " << to_string(map);
  }
}

TEST(Equiv, Idempotent) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    const SeedFamily s = rand_seed(rng, kAllFamilies[i % 4]);
    const RatFn map = rand_moebius_map(rng).as_ratfn();
    const EquivResult first = equiv_power_moebius(transform_invariants(seed_invariants(s), map));
    ASSERT_FALSE(first.matches.empty());
    const auto& m = first.matches[0];
    const EquivResult again = equiv_power_moebius(transform_invariants(seed_invariants(m.family), m.map));
    ASSERT_EQ(again.matches.size(), first.matches.size());
    for (std::size_t j = 0; j < first.matches.size(); ++j) {
      EXPECT_EQ(again.matches[j].family, first.matches[j].family);
      EXPECT_EQ(again.matches[j].map, first.matches[j].map);
    }
  }
}

TEST(Equiv, NotEquivalent) {
  // Four regular singular points: no seed has that structure.
  const Invariants inv{RatFn(Rat(1)) / (x.pow(2) * (x - RatFn(Rat(1))).pow(2) * (x + RatFn(Rat(2))).pow(2)),
                       RatFn(Rat(1)) / (x * (x - RatFn(Rat(1))) * (x + RatFn(Rat(2))))};
  const EquivResult r = equiv_power_moebius(inv);
  EXPECT_TRUE(r.matches.empty());
  EXPECT_EQ(r.failed_stage, "classify");
}
