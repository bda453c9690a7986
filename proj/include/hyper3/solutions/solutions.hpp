#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyper3/equiv/equiv.hpp"
#include "hyper3/solutions/expr.hpp"

namespace hyper3 {

struct SlotFlag {
  enum class Kind { None, Missing, Duplicate };
  Kind kind = Kind::None;
  int duplicate_of = -1;  // slot index for Duplicate
  std::string reason;
};

/// Flags for the three slots: slot 0 is the series at exponent 0, slot 1 the
/// one at exponent 1 - b2, slot 2 the one at exponent 1 - b1.
std::array<SlotFlag, 3> detect_special(const SeedFamily& family);

/// Replacement for a degenerate slot, one column per slot.
Expr meijerg_replacement(const SeedFamily& family, int slot);

struct Basis {
  SeedFamily family;
  std::array<Expr, 3> elements;
  std::array<SlotFlag, 3> flags;
  std::array<bool, 3> meijerg{};  // element is a replacement
};

Basis seed_basis(const SeedFamily& family);

/// x_seed = map(x_input) with map = moebius((rational(x))^k), and
/// y_input = exp(int gauge) * y_seed(x_seed).
struct TransformChain {
  int k = 1;
  Moebius moebius;
  std::optional<RatFn> rational;
  RatFn gauge;
  RatFn map() const;
};

/// Gauge factor exp(int w) as Power and ExpIntegral factors.
Expr gauge_factor(const RatFn& w);

Basis apply_chain(const Basis& basis, const TransformChain& chain);

}  // namespace hyper3
