// Acceptance run: one PASS/FAIL line per criterion; exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hyper3/cli/fuzz.hpp"
#include "hyper3/ode/invariants.hpp"
#include "hyper3/ratmin/ratmin.hpp"
#include "reference_odes.hpp"
#include "test_util.hpp"

using namespace hyper3;
using namespace hyper3::testing;

namespace {

const RatFn x = RatFn::x();

// Tolerances and sizes.
constexpr double kExample1Seconds = 5.0;
constexpr double kExample2Seconds = 10.0;
constexpr double kFuzzSeconds = 600.0;
constexpr double kResidualTolerance = 1e-8;
constexpr int kResidualPoints = 5;
constexpr int kSeriesOrder = 25;
constexpr std::uint64_t kFuzzSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rat non_integer(std::mt19937_64& rng) {
  while (true) {
    const Rat r = rand_rat(rng, 9, 6);
    if (!is_integer(r)) return r;
  }
}

SeedFamily random_seed(std::mt19937_64& rng, Family f) {
  SeedFamily s{f, {}};
  for (int i = 0; i < param_count(f); ++i) s.params.emplace_back(non_integer(rng));
  return canonical_params(s);
}

RatFn random_degree2(std::mt19937_64& rng) {
  while (true) {
    const RatFn f(rand_poly_exact(rng, 2, 5), rand_poly(rng, 2, 5));
    if (f.degree() == 2) return f;
  }
}

RatFn random_map(std::mt19937_64& rng, int d) {
  while (true) {
    const RatFn f(rand_poly_exact(rng, d, 5), rand_poly(rng, d - 1, 5));
    if (f.degree() == d) return f;
  }
}

// Second transcription of the replacement table, family by family, in the
// parameter names of the seed equations; slot j uses column j.
Expr table_entry(const SeedFamily& s, int slot) {
  const auto& p = s.params;
  const AlgNum one(1), zero(0);
  auto om = [&](std::size_t i) { return one - p[i]; };
  const RatFn mx = -x;
  switch (s.family) {
    case Family::F32:  // alpha, beta, gamma; delta, eta
      if (slot == 0) return meijerg({om(1), om(0), om(2)}, {}, {zero, om(3)}, {om(4)}, x);
      if (slot == 1) return meijerg({om(1), om(0), om(2)}, {}, {zero, om(3), om(4)}, {}, mx);
      return meijerg({om(1), om(0), om(2)}, {}, {om(3), om(4)}, {zero}, x);
    case Family::F22:  // alpha, beta; delta, gamma
      if (slot == 0) return meijerg({om(1), om(0)}, {}, {zero, om(3)}, {om(2)}, x);
      if (slot == 1) return meijerg({om(1), om(0)}, {}, {zero, om(3), om(2)}, {}, mx);
      return meijerg({om(1), om(0)}, {}, {om(3), om(2)}, {zero}, x);
    case Family::F12:  // alpha; beta, gamma
      if (slot == 0) return meijerg({om(0)}, {}, {zero, om(1)}, {om(2)}, x);
      if (slot == 1) return meijerg({om(0)}, {}, {zero, om(2), om(1)}, {}, mx);
      return meijerg({om(0)}, {}, {om(2), om(1)}, {zero}, x);
    case Family::F02:  // alpha, beta
      if (slot == 0) return meijerg({}, {}, {zero, om(0)}, {om(1)}, x);
      if (slot == 1) return meijerg({}, {}, {zero, om(0), om(1)}, {}, mx);
      return meijerg({}, {}, {om(0), om(1)}, {zero}, x);
  }
  return constant(0);
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const SolveOutcome r = solve(example1_ode());
  const double t = seconds_since(t0);
  o.require(r.tag == SolveOutcome::Tag::Solved, "not solved: " + r.reason);
  if (!r.solved) return o;
  const SolvedData& s = *r.solved;
  o.require(s.chain.k == 2, "k = " + std::to_string(s.chain.k));
  o.require(s.family == SeedFamily{Family::F02, {Rat(2), Rat(1, 24)}}, "family " + to_string(s.family));
  o.require(s.chain.map() == 2 * x.pow(2) / (x.pow(2) - RatFn(1)), "argument " + to_string(s.chain.map()));
  o.require(s.report.exact_ok, "certificate false");
  o.require(t < kExample1Seconds, "runtime " + std::to_string(t) + " s");
  o.detail = o.pass ? "k=2, 0F2(2,1/24), argument " + to_string(s.chain.map()) + ", " + std::to_string(t) + " s"
                    : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const SolveOutcome r = solve(example2_ode());
  const double t = seconds_since(t0);
  o.require(r.tag == SolveOutcome::Tag::Solved, "not solved: " + r.reason);
  if (!r.solved) return o;
  const SolvedData& s = *r.solved;
  o.require(s.rational_branch && s.chain.rational && s.chain.rational->degree() == 2, "rational map degree");
  if (s.chain.rational) {
    // The found map and the reference representative differ by a Moebius map.
    const RatFn ref = x.pow(2) / (RatFn(1) + x);
    o.require(decompose_through(*s.chain.rational, ref).degree() == 1, "map not Moebius-related to x^2/(1+x)");
  }
  // The reference canonical equation pulls back to the input under x^2/(1+x).
  o.require(transform_invariants(invariants(example2_canonical_ode()), x.pow(2) / (RatFn(1) + x)) ==
                invariants(example2_ode()),
            "canonical equation does not transport to the input");
  const RatFn arg = (RatFn(1) + x - x.pow(2)) / x.pow(2);
  const RatFn neg = (x.pow(2) - x - RatFn(1)) / x.pow(2);
  o.require(s.basis.elements[0] == pfq({}, {AlgNum(1)}, arg), "first element " + to_string(s.basis.elements[0]));
  o.require(s.basis.elements[2] == meijerg({}, {}, {AlgNum(0), AlgNum(0)}, {}, arg),
            "G(2,0;0,2) element " + to_string(s.basis.elements[2]));
  o.require(s.basis.elements[1] == meijerg({AlgNum(0)}, {}, {AlgNum(0), AlgNum(0), AlgNum(0)}, {}, neg),
            "G(3,1;1,3) element " + to_string(s.basis.elements[1]));
  o.require(s.report.exact_ok, "certificate false");
  o.require(t < kExample2Seconds, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = "degree-2 map, 1F2(1;1,1), basis matches, " + std::to_string(t) + " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const RatFn m = rand_moebius(rng);
    o.require(schwarzian(m).is_zero(), "S(Moebius) != 0 for " + to_string(m));
  }
  for (int k = 2; k <= 6; ++k) {
    o.require(schwarzian(x.pow(k)) == RatFn(make_rat(1 - k * k, 2)) / x.pow(2), "S(x^" + std::to_string(k) + ")");
  }
  if (o.pass) o.detail = "20 Moebius maps, k = 2..6";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const Ode3 ode{rand_ratfn(rng, 2, 5), rand_ratfn(rng, 2, 5), rand_ratfn(rng, 2, 5)};
    RatFn f;
    switch (i % 3) {
      case 0:
        f = rand_moebius(rng);
        break;
      case 1:
        f = x.pow(2 + static_cast<int>(rng() % 4));
        break;
      default:
        f = random_degree2(rng);
    }
    o.require(transform_invariants(invariants(ode), f) == invariants(substitute_ode(ode, f)),
              "case " + std::to_string(i) + " F = " + to_string(f));
  }
  if (o.pass) o.detail = "100 (ODE, F) pairs";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 100) {
    const Invariants inv{rand_ratfn(rng, 4, 6), rand_ratfn(rng, 4, 6)};
    const LProfile lp = l_profile(inv);
    if (lp.status != LStatus::Ok) continue;
    const auto back = invert_l(lp.L1, lp.L2);
    o.require(back && *back == inv, "case " + std::to_string(done));
    ++done;
  }
  if (o.pass) o.detail = "100 invariant pairs";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  int done = 0;
  for (int i = 0; done < 100; ++i) {
    const LProfile lp = l_profile(seed_invariants(random_seed(rng, kAllFamilies[i % 4])));
    if (lp.status != LStatus::Ok) continue;
    const int d = 2 + static_cast<int>(rng() % 3);
    const RatFn f = random_map(rng, d);
    const RatFn L1 = lp.L1.compose(f), L2 = lp.L2.compose(f);
    const auto r = minimize_invariants(L1, L2);
    o.require(r.has_value(), "case " + std::to_string(done) + " not decomposed");
    if (r) {
      o.require(r->F.degree() == d, "case " + std::to_string(done) + " degree " + std::to_string(r->F.degree()));
      o.require(r->L1.compose(r->F) == L1 && r->L2.compose(r->F) == L2, "case " + std::to_string(done) + " compose");
      o.require(!minimize_invariants(r->L1, r->L2), "case " + std::to_string(done) + " not maximal");
    }
    ++done;
  }
  if (o.pass) o.detail = "100 planted decompositions, all maximal";
  return o;
}

std::vector<FuzzResult> g_fuzz;

Outcome criterion7() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int solved = 0;
  for (int i = 0; i < 200; ++i) {
    g_fuzz.push_back(run_fuzz_case(i, kFuzzSeed, FuzzOptions{}, SolveOptions{}));
    const FuzzResult& r = g_fuzz.back();
    const bool ok = r.outcome.tag == SolveOutcome::Tag::Solved && r.outcome.solved->report.exact_ok;
    solved += ok;
    o.require(ok, "case " + std::to_string(i) + " " + to_string(r.planted.family) + ": " + r.outcome.reason);
  }
  const double t = seconds_since(t0);
  o.require(t < kFuzzSeconds, "runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(solved) + "/200 solved, " + std::to_string(t) + " s";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Family f = kAllFamilies[i % 4];
    SeedFamily s = random_seed(rng, f);
    const std::size_t lo = s.params.size() - 2;
    if (i % 2 == 0) {
      s.params[lo + rng() % 2] = AlgNum(-static_cast<long>(rng() % 3));
    } else {
      s.params[lo + 1] = s.params[lo];
    }
    s = canonical_params(s);
    TransformChain chain;
    chain.k = 1 + static_cast<int>(rng() % 3);
    const RatFn m = rand_moebius(rng);
    chain.moebius = {m.num().coeff(1), m.num().coeff(0), m.den().coeff(1), m.den().coeff(0)};
    const Ode3 ode = substitute_ode(seed(s), chain.map());
    const SolveOutcome r = solve(ode);
    const std::string tag = "case " + std::to_string(i) + " " + to_string(s);
    o.require(r.tag == SolveOutcome::Tag::Solved, tag + " not solved");
    if (!r.solved) continue;
    const SolvedData& d = *r.solved;
    bool any_replacement = false;
    int native = 0;
    for (int k = 0; k < 3; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      if (d.basis.meijerg[ks]) {
        any_replacement = true;
        const Basis expected_seed = [&] {
          Basis b;
          b.elements[ks] = reduce_order(table_entry(d.family, k));
          return b;
        }();
        const Expr expected = product({gauge_factor(d.chain.gauge), substitute(expected_seed.elements[ks], d.chain.map())});
        o.require(d.basis.elements[ks] == expected, tag + " slot " + std::to_string(k) + " not per table");
      } else {
        ++native;
      }
    }
    o.require(any_replacement, tag + " no replacement");
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) o.require(d.basis.elements[a] != d.basis.elements[b], tag + " repeated element");
    }
    if (f == Family::F02) o.require(native >= 1, tag + " no pFq-native element");
    o.require(d.report.exact_ok, tag + " certificate false");
  }
  if (o.pass) o.detail = "20 degenerate cases";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const Rat a = non_integer(rng), b = non_integer(rng);
    const auto c = pfq_series({}, {a, b}, 3);
    o.require(c[2] == AlgNum(Rat(1 / (2 * a * b * (a + 1) * (b + 1)))), "x^2 coefficient");
  }
  int checked = 0;
  double worst = 0;
  auto check_basis = [&](const SolvedData& s, const std::string& tag) {
    for (int k = 0; k < 3; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      if (contains_meijerg(s.basis.elements[ks])) continue;
      const NumericEntry* e = nullptr;
      for (const auto& n : s.report.numeric) {
        if (n.element == k) e = &n;
      }
      o.require(e && !e->skipped, tag + " element " + std::to_string(k) + " not checked" + (e ? ": " + e->reason : ""));
      if (!e || e->skipped) continue;
      o.require(static_cast<int>(e->points.size()) == kResidualPoints, tag + " too few sample points");
      o.require(e->max_relative_residual < kResidualTolerance,
                tag + " element " + std::to_string(k) + " residual " + std::to_string(e->max_relative_residual));
      o.require(s.report.series_order == kSeriesOrder, "series order");
      worst = std::max(worst, e->max_relative_residual);
      ++checked;
    }
  };
  const SolveOutcome e1 = solve(example1_ode());
  if (e1.solved) check_basis(*e1.solved, "example 1");
  for (const auto& r : g_fuzz) {
    if (r.outcome.solved) check_basis(*r.outcome.solved, "fuzz case " + std::to_string(r.index));
  }
  if (o.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    o.detail = "20 coefficients exact; " + std::to_string(checked) + " elements, worst residual " + buf;
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  int perturbed = 0;
  for (const auto& r : g_fuzz) {
    if (perturbed == 50) break;
    if (!r.outcome.solved) continue;
    const SolvedData& s = *r.outcome.solved;
    const Invariants inv = invariants(r.planted.ode);
    TransformChain chain = s.chain;
    SeedFamily fam = s.family;
    switch (perturbed % 6) {
      case 0:
        chain.moebius.a += 1;
        break;
      case 1:
        chain.moebius.b += 1;
        break;
      case 2:
        chain.moebius.d += 1;
        break;
      case 3:
        chain.k += 1;
        break;
      case 4:
        fam.params.front() += AlgNum(1);
        break;
      default:
        fam.params.back() += AlgNum(1);
    }
    const Moebius& m = chain.moebius;
    if (m.a * m.d - m.b * m.c == 0) chain.moebius.c += 1;
    o.require(!exact_equivalence_check(inv, fam, chain), "perturbation " + std::to_string(perturbed) + " accepted");
    ++perturbed;
  }
  o.require(perturbed == 50, "not enough solved cases to perturb");
  const SolveOutcome cube = solve(explicit_ode(RatFn(0), RatFn(0), RatFn(1)));
  o.require(cube.tag != SolveOutcome::Tag::Solved, "y''' = y solved");
  std::mt19937_64 rng(10);
  RatFn c2(0), c1(0), c0(0);
  for (long p : {0L, 1L, -1L, 2L}) {
    const RatFn d = x - RatFn(p);
    c2 += RatFn(rand_nonzero_rat(rng, 5, 3)) / d;
    c1 += RatFn(rand_nonzero_rat(rng, 5, 3)) / d.pow(2);
    c0 += RatFn(rand_nonzero_rat(rng, 5, 3)) / d.pow(3);
  }
  const SolveOutcome four = solve(Ode3{c2, c1, c0});
  o.require(four.tag != SolveOutcome::Tag::Solved, "4-singularity equation solved");
  if (o.pass) {
    o.detail = "50 perturbations rejected; y'''=y " + tag_name(cube.tag) + "; 4-singularity " + tag_name(four.tag);
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Example 1 reproduction", criterion1},
      {"Example 2 reproduction", criterion2},
      {"Schwarzian table", criterion3},
      {"invariant transport vs substitution", criterion4},
      {"L round trip", criterion5},
      {"decomposition suite", criterion6},
      {"round-trip fuzz (200)", criterion7},
      {"degenerate-parameter suite", criterion8},
      {"series and residuals", criterion9},
      {"negative controls", criterion10},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
