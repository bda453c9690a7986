#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyper3/ode/ode.hpp"
#include "hyper3/solutions/solutions.hpp"

namespace hyper3 {

using Complex = std::complex<double>;

struct UnsupportedNode : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutOfDisk : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact coefficients c_0..c_{n-1} of pFq(upper; lower; x).
std::vector<AlgNum> pfq_series(const std::vector<AlgNum>& upper, const std::vector<AlgNum>& lower, int n);

/// d/dx; throws UnsupportedNode on MeijerG.
Expr expr_diff(const Expr& e);

/// Radius inside which series with more upper than lower parameters are summed.
inline constexpr double kDiskRadius = 0.8;

struct EvalResult {
  Complex value;
  double truncation = 0;  // magnitude of the last series term used
};

/// Truncated-series evaluation; throws OutOfDisk, UndefinedSeries,
/// UnsupportedNode (MeijerG or an unevaluated integral).
EvalResult expr_eval(const Expr& e, Complex x0, int series_order);

struct NumericEntry {
  int element = 0;
  std::vector<Complex> points;
  double max_relative_residual = 0;
  bool skipped = false;
  std::string reason;
};

/// max |y''' + c2 y'' + c1 y' + c0 y| / max |term| over the points.
NumericEntry residual_check(const Ode3& ode, const Expr& e, const std::vector<Complex>& points, int series_order);

/// Sample points kept at least 1/8 of the minimal singularity gap away from
/// every singular point of the ODE, where every series in e has a negligible
/// truncation tail. Real points come first, preferring (0, 1/2); when the real
/// line has too few, complex points around the zeros of the series arguments
/// (where the arguments are small) fill the rest.
std::vector<Complex> sample_points(const Ode3& ode, const Expr& e, int count, int series_order);

bool exact_equivalence_check(const Invariants& input, const SeedFamily& family, const TransformChain& chain);

struct VerificationReport {
  bool exact_ok = false;
  std::vector<NumericEntry> numeric;
  int series_order = 25;
};

struct VerifyOptions {
  bool exact = true;
  bool numeric = true;
  int series_order = 25;
  int points = 5;
};

VerificationReport verify_solution(const Ode3& ode, const SeedFamily& family, const TransformChain& chain,
                                   const Basis& basis, const VerifyOptions& options);

}  // namespace hyper3
