#include <algorithm>

#include "hyper3/equiv/equiv.hpp"

namespace hyper3 {

namespace {

std::vector<int> divisors_descending(int k) {
  std::vector<int> out;
  for (int d = k; d >= 1; --d) {
    if (k % d == 0) out.push_back(d);
  }
  return out;
}

std::string family_list(const std::vector<Family>& fs) {
  std::string out;
  for (Family f : fs) out += (out.empty() ? "" : ", ") + family_name(f);
  return out.empty() ? "none" : out;
}

}  // namespace

EquivResult equiv_power_moebius(const Invariants& inv) {
  EquivResult res;
  const JInv j = j_invariants(inv);
  const auto pm = power_minimize(j);
  if (!pm) {
    res.both_constant = true;
    res.failed_stage = "power";
    res.reason = "both J invariants are constant";
    return res;
  }
  res.trace.push_back("maximal power k = " + std::to_string(pm->k));

  for (int k : divisors_descending(pm->k)) {
    const Invariants minv = from_j(depower(j, k));
    const SingularityProfile prof = singularity_profile(minv);
    std::string points;
    for (const auto& p : prof.points) points += (points.empty() ? "" : "; ") + to_string(p);
    res.trace.push_back("k = " + std::to_string(k) + ": singular points " + points);
    if (prof.has_unresolved()) {
      res.failed_stage = "classify";
      res.reason = "singular point at an irrational algebraic location";
      res.trace.push_back("k = " + std::to_string(k) + ": " + res.reason);
      continue;
    }
    const auto families = classify(prof);
    res.trace.push_back("k = " + std::to_string(k) + ": candidate families " + family_list(families));
    if (families.empty()) {
      res.failed_stage = "classify";
      res.reason = "singularity structure matches no seed family";
      continue;
    }
    for (Family f : families) {
      for (const auto& cand : moebius_candidates(prof, f)) {
        for (const auto& m : match_parameters(minv, f, cand, &res.trace)) {
          const RatFn map = m.moebius.as_ratfn().compose(RatFn::x().inflate(k));
          if (transform_invariants(seed_invariants(m.seed), map) != inv) {
            res.trace.push_back("rejected " + to_string(m.seed) + " with map " + to_string(map) +
                                ": transported invariants differ");
            continue;
          }
          const bool dup = std::any_of(res.matches.begin(), res.matches.end(), [&](const EquivPM& e) {
            return e.family == m.seed && e.map == map;
          });
          if (!dup) res.matches.push_back({k, m.moebius, m.seed, m.lambda, map});
        }
      }
    }
    if (!res.matches.empty()) {
      res.failed_stage.clear();
      res.reason.clear();
      return res;
    }
    res.failed_stage = "match";
    res.reason = "no seed parameters reproduce the invariants";
  }
  return res;
}

}  // namespace hyper3
