#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyper3/algebra/algnum.hpp"
#include "hyper3/ode/ode.hpp"

namespace hyper3 {

enum class Family { F32, F22, F12, F02 };

/// Seed equation with its parameters: upper list first, then the two lower
/// parameters. 3F2: [a1,a2,a3,b1,b2]; 2F2: [a1,a2,b1,b2]; 1F2: [a1,b1,b2];
/// 0F2: [b1,b2].
struct SeedFamily {
  Family family = Family::F02;
  std::vector<AlgNum> params;

  std::vector<AlgNum> upper() const;
  std::vector<AlgNum> lower() const;
  friend bool operator==(const SeedFamily& a, const SeedFamily& b) {
    return a.family == b.family && a.params == b.params;
  }
};

int upper_count(Family f);
int param_count(Family f);
std::string family_name(Family f);  // "3F2", ...
std::optional<Family> family_from_name(const std::string& name);
inline constexpr Family kAllFamilies[] = {Family::F32, Family::F22, Family::F12, Family::F02};

/// Elementary symmetric functions of the upper parameters (e1, e2, e3; unused
/// entries zero) and of the lower pair (sum, product).
struct SeedSymmetric {
  Family family = Family::F02;
  Rat e1, e2, e3;
  Rat lower_sum, lower_prod;
};

/// Throws std::domain_error when a symmetric function is irrational.
SeedSymmetric symmetric_functions(const SeedFamily& s);

Ode3 seed_from_symmetric(const SeedSymmetric& s);
Ode3 seed(const SeedFamily& s);

/// Canonical parameter order: descending rationals, then surds.
void canonical_sort(std::vector<AlgNum>& params);

/// Sorts each symmetric group descending (rationals first, surd pairs after).
SeedFamily canonical_params(SeedFamily s);

std::string to_string(const SeedFamily& s);

}  // namespace hyper3
