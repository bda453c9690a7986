#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyper3/algebra/algnum.hpp"
#include "hyper3/ode/invariants.hpp"
#include "hyper3/ode/seeds.hpp"

namespace hyper3 {

/// x -> (a x + b)/(c x + d)
struct Moebius {
  Rat a{1}, b{0}, c{0}, d{1};
  RatFn as_ratfn() const;
  Moebius inverse() const;
};

// ---- power minimization ----

struct PowerMinimized {
  int k = 1;
  JInv minimized;
};

/// Maximal k with both J's functions of x^k, and the de-powered pair.
/// nullopt when both J's are constant.
std::optional<PowerMinimized> power_minimize(const JInv& j);
/// De-powers by a given k (which must divide the maximal one).
JInv depower(const JInv& j, int k);

// ---- classification ----

struct Signature {
  Family family;
  int regular = 0;
  int irregular = 0;
  int irregular_pole_I1 = -1;
  int irregular_pole_I0 = -1;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.family == b.family && a.regular == b.regular && a.irregular == b.irregular &&
           a.irregular_pole_I1 == b.irregular_pole_I1 && a.irregular_pole_I0 == b.irregular_pole_I0;
  }
};

/// The shipped table (generated source).
const std::vector<Signature>& signature_table();
/// Recomputes the table from random seed instances under random Moebius maps.
std::vector<Signature> generate_signature_table(unsigned long rng_seed, int params_per_family, int maps_per_params);
std::string render_signature_table(const std::vector<Signature>& table);

std::vector<Family> classify(const SingularityProfile& profile);

// ---- Moebius recovery and parameter matching ----

/// A normalizing map M0 sending the chosen regular point(s) to the seed's and
/// the irregular point to infinity; for non-3F2 families the seed is matched
/// up to x -> lambda x.
struct MoebiusCandidate {
  Moebius m0;
  bool scaled = true;
  std::string description;
};

struct UnresolvedSingularity : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IrrationalBeyondQuadratic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<MoebiusCandidate> moebius_candidates(const SingularityProfile& profile, Family family);

/// Exponents at a regular point of y''' = I1 y' + I0 y (sorted canonically).
std::vector<AlgNum> indicial_roots(const Invariants& inv, const Rat& x0);

struct ParameterMatch {
  SeedFamily seed;
  Moebius moebius;  // lambda * M0
  Rat lambda{1};
};

/// All exact matches of inv (already de-powered) with the family through the
/// candidate map.
std::vector<ParameterMatch> match_parameters(const Invariants& inv, Family family, const MoebiusCandidate& cand,
                                             std::vector<std::string>* trace = nullptr);

// ---- orchestration ----

struct EquivPM {
  int k = 1;
  Moebius moebius;
  SeedFamily family;
  Rat lambda{1};
  RatFn map;  // moebius(x^k)
};

struct EquivResult {
  std::vector<EquivPM> matches;  // every verified match for the first k that produced one
  std::string failed_stage;      // set when matches is empty
  std::string reason;
  std::vector<std::string> trace;
  bool both_constant = false;
};

Invariants seed_invariants(const SeedFamily& s);

EquivResult equiv_power_moebius(const Invariants& inv);

}  // namespace hyper3
