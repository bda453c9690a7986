#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hyper3/cli/solve.hpp"

namespace hyper3 {

struct FuzzOptions {
  std::optional<Family> family;  // uniform over the four when absent
  bool include_degenerate = false;
  int max_k = 4;
  int max_degree = 4;
};

/// A planted in-class equation: the seed transported through the chain, with
/// the chain's gauge attached.
struct FuzzCase {
  std::uint64_t rng_seed = 0;
  SeedFamily family;
  TransformChain chain;
  Ode3 ode;
};

/// Deterministic in rng_seed.
FuzzCase fuzz_generate(std::uint64_t rng_seed, const FuzzOptions& options = {});

/// Seed of case i in a run started with base seed s.
std::uint64_t fuzz_case_seed(std::uint64_t s, int i);

struct FuzzResult {
  int index = 0;
  FuzzCase planted;
  SolveOutcome outcome;
  bool family_matches = false;
  double seconds = 0;
};

FuzzResult run_fuzz_case(int index, std::uint64_t base_seed, const FuzzOptions& fuzz, const SolveOptions& solve);

}  // namespace hyper3
