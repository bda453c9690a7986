#pragma once

#include <string>

#include "hyper3/cli/solve.hpp"

namespace hyper3 {

inline constexpr int kSchemaVersion = 1;

struct ReportOptions {
  bool trace = false;
  double tolerance = 1e-8;
};

/// Deterministic JSON for a solve run (no timings, fixed key order).
std::string solve_json(const Ode3& ode, const SolveOutcome& outcome, const ReportOptions& options);
std::string solve_text(const Ode3& ode, const SolveOutcome& outcome, const ReportOptions& options);

/// I, J, L and the singularity profile.
std::string invariants_json(const Ode3& ode);
std::string invariants_text(const Ode3& ode);

}  // namespace hyper3
