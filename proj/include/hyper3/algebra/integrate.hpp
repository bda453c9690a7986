#pragma once

#include <optional>
#include <vector>

#include "hyper3/algebra/algnum.hpp"
#include "hyper3/algebra/ratfn.hpp"

namespace hyper3 {

struct LogTerm {
  AlgNum residue;
  Poly argument;  // monic, squarefree
};

/// rational_part + sum residue*log(argument) + integral of remainder.
struct IntegralForm {
  RatFn rational_part;
  std::vector<LogTerm> log_terms;
  std::optional<RatFn> remainder;

  /// d/dx of the represented antiderivative.
  RatFn derivative() const;
};

/// Antiderivative by Hermite reduction and Rothstein-Trager. Logarithmic
/// parts whose residues are not rational stay in the remainder.
IntegralForm integrate_rational(const RatFn& w);

}  // namespace hyper3
