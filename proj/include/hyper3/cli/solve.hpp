#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyper3/solutions/solutions.hpp"
#include "hyper3/verify/verify.hpp"

namespace hyper3 {

struct SolveOptions {
  VerifyOptions verify;
  double tolerance = 1e-8;
};

struct SolvedData {
  SeedFamily family;
  TransformChain chain;
  Basis basis;
  VerificationReport report;
  bool rational_branch = false;
};

struct SolveOutcome {
  enum class Tag { Solved, NotEquivalent, Unsupported };
  Tag tag = Tag::NotEquivalent;
  std::optional<SolvedData> solved;
  std::string stage;  // NotEquivalent: the stage that declined
  std::string reason;
  std::vector<std::string> trace;
  Invariants invariants;
};

std::string tag_name(SolveOutcome::Tag t);

/// Normal form, power/Moebius equivalence, and on failure the rational branch
/// (minimize the absolute invariants, re-enter on the canonical equation).
/// Among the equivalent chains the one with the simplest gauge is reported.
SolveOutcome solve(const Ode3& ode, const SolveOptions& options = {});

/// True when every numeric entry that was not skipped is within tolerance.
bool numeric_ok(const VerificationReport& r, double tolerance);

}  // namespace hyper3
