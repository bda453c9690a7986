#include "hyper3/cli/fuzz.hpp"

#include <chrono>
#include <random>

namespace hyper3 {

namespace {

// Bounded draws by modulo keep the stream identical across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat small_rat(std::mt19937_64& rng) { return make_rat(draw(rng, -9, 9), draw(rng, 1, 4)); }

bool integer_gap(const AlgNum& a, const AlgNum& b) { return (a - b).is_integer(); }

bool generic(const SeedFamily& s) {
  for (const auto& f : detect_special(s)) {
    if (f.kind != SlotFlag::Kind::None) return false;
  }
  for (const auto& a : s.upper()) {
    for (const auto& b : s.lower()) {
      if (integer_gap(a, b)) return false;
    }
    if (a.is_integer()) return false;
  }
  return true;
}

SeedFamily draw_generic(std::mt19937_64& rng, Family f) {
  while (true) {
    SeedFamily s{f, {}};
    for (int i = 0; i < param_count(f); ++i) s.params.emplace_back(small_rat(rng));
    s = canonical_params(s);
    if (generic(s)) return s;
  }
}

SeedFamily draw_degenerate(std::mt19937_64& rng, Family f) {
  SeedFamily s = draw_generic(rng, f);
  const std::size_t lo = s.params.size() - 2;
  switch (draw(rng, 0, 2)) {
    case 0:
      s.params[lo + static_cast<std::size_t>(draw(rng, 0, 1))] = AlgNum(-draw(rng, 0, 3));
      break;
    case 1:
      s.params[lo + 1] = s.params[lo];
      break;
    default:
      s.params[lo + static_cast<std::size_t>(draw(rng, 0, 1))] = AlgNum(draw(rng, 1, 3));
  }
  return canonical_params(s);
}

Moebius draw_moebius(std::mt19937_64& rng) {
  while (true) {
    Moebius m{Rat(draw(rng, -5, 5)), Rat(draw(rng, -5, 5)), Rat(draw(rng, -5, 5)), Rat(draw(rng, -5, 5))};
    if (m.a * m.d - m.b * m.c != 0) return m;
  }
}

Poly draw_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rat> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(draw(rng, -4, 4));
  if (c.back() == 0) c.back() = 1;
  return Poly::from_coeffs(c);
}

// A rational map of exact degree d, not already a Moebius map.
RatFn draw_rational(std::mt19937_64& rng, int d) {
  while (true) {
    const Poly n = draw_poly(rng, d);
    const Poly m = draw_poly(rng, static_cast<int>(draw(rng, 0, d)));
    const RatFn f(n, m);
    if (f.degree() == d) return f;
  }
}

// Log terms with rational residues plus the derivative of a polynomial.
RatFn draw_gauge(std::mt19937_64& rng) {
  if (draw(rng, 0, 3) == 0) return RatFn(0);
  const RatFn x = RatFn::x();
  RatFn w(0);
  const long logs = draw(rng, 0, 2);
  for (long i = 0; i < logs; ++i) w += RatFn(make_rat(draw(rng, -6, 6), draw(rng, 1, 3))) / (x - RatFn(draw(rng, -3, 3)));
  if (draw(rng, 0, 2) == 0) w += RatFn(small_rat(rng)) * x + RatFn(small_rat(rng));
  return w;
}

}  // namespace

std::uint64_t fuzz_case_seed(std::uint64_t s, int i) {
  // splitmix64 step over (s, i)
  std::uint64_t z = s + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

FuzzCase fuzz_generate(std::uint64_t rng_seed, const FuzzOptions& options) {
  std::mt19937_64 rng(rng_seed);
  FuzzCase c;
  c.rng_seed = rng_seed;
  const Family f = options.family ? *options.family : kAllFamilies[draw(rng, 0, 3)];
  const bool degenerate = options.include_degenerate && draw(rng, 0, 1) == 0;
  c.family = degenerate ? draw_degenerate(rng, f) : draw_generic(rng, f);
  c.chain.moebius = draw_moebius(rng);
  if (options.max_degree >= 2 && draw(rng, 0, 2) == 0) {
    c.chain.k = 1;
    c.chain.rational = draw_rational(rng, static_cast<int>(draw(rng, 2, options.max_degree)));
  } else {
    c.chain.k = static_cast<int>(draw(rng, 1, std::max(1, options.max_k)));
  }
  c.chain.gauge = draw_gauge(rng);
  c.ode = gauge_ode(substitute_ode(seed(c.family), c.chain.map()), -c.chain.gauge);
  return c;
}

FuzzResult run_fuzz_case(int index, std::uint64_t base_seed, const FuzzOptions& fuzz, const SolveOptions& solve_opts) {
  FuzzResult r;
  r.index = index;
  r.planted = fuzz_generate(fuzz_case_seed(base_seed, index), fuzz);
  const auto t0 = std::chrono::steady_clock::now();
  r.outcome = solve(r.planted.ode, solve_opts);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.family_matches = r.outcome.solved && r.outcome.solved->family.family == r.planted.family.family;
  return r;
}

}  // namespace hyper3
