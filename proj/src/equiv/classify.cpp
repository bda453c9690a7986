#include <algorithm>
#include <random>
#include <tuple>

#include "hyper3/equiv/equiv.hpp"

namespace hyper3 {

const std::vector<Signature>& signature_table() {
  static const std::vector<Signature> table = {
#include "hyper3/equiv/signature_table.inc"
  };
  return table;
}

namespace {

// Portable draws (distribution objects are implementation-defined).
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat draw_param(std::mt19937_64& rng) {
  while (true) {
    const Rat r = make_rat(draw(rng, -20, 20), draw(rng, 2, 7));
    if (!is_integer(r)) return r;
  }
}

Moebius draw_moebius(std::mt19937_64& rng) {
  while (true) {
    Moebius m{Rat(draw(rng, -4, 4)), Rat(draw(rng, -4, 4)), Rat(draw(rng, -3, 3)), Rat(draw(rng, -4, 4))};
    if (m.a * m.d - m.b * m.c != 0) return m;
  }
}

Signature signature_of(Family f, const SingularityProfile& prof) {
  Signature s{f};
  s.regular = prof.count_regular();
  s.irregular = prof.count_irregular();
  for (const auto& p : prof.points) {
    if (!p.regular) {
      s.irregular_pole_I1 = p.pole_I1;
      s.irregular_pole_I0 = p.pole_I0;
    }
  }
  return s;
}

auto key(const Signature& s) {
  return std::make_tuple(static_cast<int>(s.family), s.regular, s.irregular, s.irregular_pole_I1,
                         s.irregular_pole_I0);
}

}  // namespace

std::vector<Signature> generate_signature_table(unsigned long rng_seed, int params_per_family, int maps_per_params) {
  std::mt19937_64 rng(rng_seed);
  std::vector<Signature> out;
  for (Family f : kAllFamilies) {
    for (int i = 0; i < params_per_family; ++i) {
      SeedFamily s{f, {}};
      for (int j = 0; j < param_count(f); ++j) s.params.emplace_back(draw_param(rng));
      const Invariants inv = seed_invariants(s);
      for (int j = 0; j < maps_per_params; ++j) {
        const Signature sig = signature_of(f, singularity_profile(transform_invariants(inv, draw_moebius(rng).as_ratfn())));
        if (std::find(out.begin(), out.end(), sig) == out.end()) out.push_back(sig);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Signature& a, const Signature& b) { return key(a) < key(b); });
  return out;
}

std::string render_signature_table(const std::vector<Signature>& table) {
  static const char* names[] = {"Family::F32", "Family::F22", "Family::F12", "Family::F02"};
  std::string out = "// Generated by tools/gen_signatures; do not edit.\n";
  out += "// {family, regular points, irregular points, pole order of I1 and I0 at the irregular point}\n";
  for (const auto& s : table) {
    out += "{" + std::string(names[static_cast<int>(s.family)]) + ", " + std::to_string(s.regular) + ", " +
           std::to_string(s.irregular) + ", " + std::to_string(s.irregular_pole_I1) + ", " +
           std::to_string(s.irregular_pole_I0) + "},\n";
  }
  return out;
}

std::vector<Family> classify(const SingularityProfile& profile) {
  std::vector<Family> out;
  const Signature observed = signature_of(Family::F02, profile);
  for (const auto& s : signature_table()) {
    if (s.regular != observed.regular || s.irregular != observed.irregular) continue;
    if (s.irregular == 1) {
      const bool ok = s.irregular_pole_I1 > 2
                          ? observed.irregular_pole_I1 == s.irregular_pole_I1
                          : observed.irregular_pole_I1 <= 2 && observed.irregular_pole_I0 == s.irregular_pole_I0;
      if (!ok) continue;
    }
    if (std::find(out.begin(), out.end(), s.family) == out.end()) out.push_back(s.family);
  }
  return out;
}

}  // namespace hyper3
