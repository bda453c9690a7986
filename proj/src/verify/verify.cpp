#include "hyper3/verify/verify.hpp"

#include <algorithm>
#include <cmath>

#include "hyper3/ode/invariants.hpp"

namespace hyper3 {

namespace {

Complex rational_value(const RatFn& f, Complex x0) {
  const Complex v = f.eval(x0);
  // Keep real values on the upper side of the principal branch cut.
  return x0.imag() == 0 ? Complex(v.real(), 0.0) : v;
}

Complex series_sum(const Expr& e, Complex z, int order, double& truncation) {
  if (e.upper.size() > e.lower.size() && std::abs(z) > kDiskRadius) {
    throw OutOfDisk("series argument " + std::to_string(std::abs(z)) + " outside the disk");
  }
  std::vector<Complex> up, lo;
  for (const auto& a : e.upper) up.push_back(a.to_complex());
  for (const auto& b : e.lower) lo.push_back(b.to_complex());
  Complex term(1), total(1);
  for (int m = 0; m + 1 < order; ++m) {
    Complex ratio(1.0 / (m + 1));
    for (const auto& a : up) ratio *= a + static_cast<double>(m);
    for (const auto& b : lo) ratio /= b + static_cast<double>(m);
    term *= ratio * z;
    total += term;
  }
  truncation = std::max(truncation, std::abs(term));
  return total;
}

Complex eval_rec(const Expr& e, Complex x0, int order, double& truncation) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return e.value.to_complex();
    case Expr::Kind::Variable:
      return x0;
    case Expr::Kind::Rational:
      return rational_value(e.fn, x0);
    case Expr::Kind::Power:
      return std::pow(eval_rec(e.children.front(), x0, order, truncation), e.value.to_complex());
    case Expr::Kind::Product: {
      Complex v(1);
      for (const auto& c : e.children) v *= eval_rec(c, x0, order, truncation);
      return v;
    }
    case Expr::Kind::Sum: {
      Complex v(0);
      for (const auto& c : e.children) v += eval_rec(c, x0, order, truncation);
      return v;
    }
    case Expr::Kind::ExpIntegral: {
      if (e.integral.remainder) throw UnsupportedNode("unevaluated integral in exponent");
      Complex v = rational_value(e.integral.rational_part, x0);
      for (const auto& t : e.integral.log_terms) {
        v += t.residue.to_complex() * std::log(rational_value(RatFn(t.argument), x0));
      }
      return std::exp(v);
    }
    case Expr::Kind::PFQ:
      return series_sum(e, rational_value(e.fn, x0), order, truncation);
    case Expr::Kind::MeijerG:
      throw UnsupportedNode("MeijerG has no numeric evaluation");
  }
  return {};
}

// Singular points of the ODE coefficients, from the squarefree part of the
// common denominator so that repeated poles do not split numerically.
std::vector<Complex> singular_points(const Ode3& ode) {
  Poly d(Rat(1));
  for (const RatFn* c : {&ode.c2, &ode.c1, &ode.c0}) d = exact_div(d * c->den(), poly_gcd(d, c->den()));
  std::vector<Complex> out;
  for (const auto& [factor, mult] : squarefree(d)) {
    if (factor.is_constant()) continue;
    for (const auto& r : numeric_roots(factor)) {
      out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
  }
  return out;
}

constexpr double kTailTolerance = 1e-13;

// |c_N z^N| * N^3: the size of the truncation error after three derivatives.
double tail_estimate(const Expr& e, double z, int order) {
  double term = 1;
  for (int m = 0; m + 1 < order; ++m) {
    double ratio = z / (m + 1);
    for (const auto& a : e.upper) ratio *= std::abs(a.to_complex() + static_cast<double>(m));
    for (const auto& b : e.lower) ratio /= std::abs(b.to_complex() + static_cast<double>(m));
    term *= ratio;
  }
  return term * order * order * order;
}

void collect_arguments(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind == Expr::Kind::PFQ || e.kind == Expr::Kind::Rational) out.push_back(&e);
  for (const auto& c : e.children) collect_arguments(c, out);
}

}  // namespace

std::vector<AlgNum> pfq_series(const std::vector<AlgNum>& upper, const std::vector<AlgNum>& lower, int n) {
  for (const auto& b : lower) {
    if (b.is_nonpositive_integer()) throw UndefinedSeries("lower parameter " + to_string(b));
  }
  std::vector<AlgNum> c;
  if (n <= 0) return c;
  c.emplace_back(1);
  for (int m = 0; m + 1 < n; ++m) {
    AlgNum num(1), den(m + 1);
    for (const auto& a : upper) num *= a + AlgNum(m);
    for (const auto& b : lower) den *= b + AlgNum(m);
    c.push_back(c.back() * num / den);
  }
  return c;
}

Expr expr_diff(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return constant(0);
    case Expr::Kind::Variable:
      return constant(1);
    case Expr::Kind::Rational:
      return rational(e.fn.diff());
    case Expr::Kind::Power: {
      const Expr& b = e.children.front();
      return product({constant(e.value), power(b, e.value - AlgNum(1)), expr_diff(b)});
    }
    case Expr::Kind::Product: {
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        std::vector<Expr> f = e.children;
        f[i] = expr_diff(f[i]);
        terms.push_back(product(f));
      }
      return sum(terms);
    }
    case Expr::Kind::Sum: {
      std::vector<Expr> terms;
      for (const auto& c : e.children) terms.push_back(expr_diff(c));
      return sum(terms);
    }
    case Expr::Kind::ExpIntegral:
      return product({e, rational(e.integral.derivative())});
    case Expr::Kind::PFQ: {
      AlgNum c(1);
      std::vector<AlgNum> up, lo;
      for (const auto& a : e.upper) {
        c *= a;
        up.push_back(a + AlgNum(1));
      }
      for (const auto& b : e.lower) {
        c /= b;
        lo.push_back(b + AlgNum(1));
      }
      if (c == AlgNum(0)) return constant(0);
      return product({constant(c), rational(e.fn.diff()), pfq(up, lo, e.fn)});
    }
    case Expr::Kind::MeijerG:
      throw UnsupportedNode("MeijerG derivatives are not formed");
  }
  return constant(0);
}

EvalResult expr_eval(const Expr& e, Complex x0, int series_order) {
  EvalResult r;
  r.value = eval_rec(e, x0, series_order, r.truncation);
  return r;
}

NumericEntry residual_check(const Ode3& ode, const Expr& e, const std::vector<Complex>& points, int series_order) {
  NumericEntry out;
  out.points = points;
  if (contains_meijerg(e)) {
    out.skipped = true;
    out.reason = "MeijerG element (certified by the exact check only)";
    return out;
  }
  if (points.empty()) {
    out.skipped = true;
    out.reason = "no admissible sample points";
    return out;
  }
  try {
    const Expr d1 = expr_diff(e);
    const Expr d2 = expr_diff(d1);
    const Expr d3 = expr_diff(d2);
    for (const Complex& x0 : points) {
      const Complex y = expr_eval(e, x0, series_order).value;
      const Complex t[4] = {expr_eval(d3, x0, series_order).value,
                            rational_value(ode.c2, x0) * expr_eval(d2, x0, series_order).value,
                            rational_value(ode.c1, x0) * expr_eval(d1, x0, series_order).value,
                            rational_value(ode.c0, x0) * y};
      double scale = 0;
      for (const auto& v : t) scale = std::max(scale, std::abs(v));
      const double res = std::abs(t[0] + t[1] + t[2] + t[3]);
      const double rel = scale == 0 ? res : res / scale;
      out.max_relative_residual = std::max(out.max_relative_residual, rel);
    }
  } catch (const std::exception& ex) {
    out.skipped = true;
    out.reason = ex.what();
  }
  return out;
}

std::vector<Complex> sample_points(const Ode3& ode, const Expr& e, int count, int series_order) {
  const auto sing = singular_points(ode);
  double gap = 1.0;
  for (std::size_t i = 0; i < sing.size(); ++i) {
    for (std::size_t j = i + 1; j < sing.size(); ++j) {
      const double d = std::abs(sing[i] - sing[j]);
      if (d > 1e-9) gap = std::min(gap, d);
    }
  }
  // Points keep gap/8 from the singularities when possible; rings fall back to gap/64.
  const double margin = gap / 64;
  std::vector<const Expr*> args;
  collect_arguments(e, args);
  auto admissible = [&](Complex p, double keep) {
    for (const Complex& s : sing) {
      if (std::abs(p - s) < keep) return false;
    }
    for (const Expr* a : args) {
      if (p.imag() == 0 && a->fn.has_pole(Rat(p.real()))) return false;
      const double z = std::abs(a->fn.eval(p));
      if (!std::isfinite(z)) return false;
      if (a->kind == Expr::Kind::PFQ) {
        if (a->upper.size() > a->lower.size() && z > kDiskRadius) return false;
        if (tail_estimate(*a, z, series_order) > kTailTolerance) return false;
      }
    }
    return true;
  };
  // Real windows: (0, 1/2) first, then (-1/2, 0), then +-(1/2, 2).
  std::vector<Complex> candidates;
  const int dens[] = {11, 13, 17, 19, 23, 29, 31, 37};
  for (int den : dens) {
    for (int num = 1; 2 * num < den; ++num) candidates.emplace_back(static_cast<double>(num) / den, 0.0);
  }
  for (int den : dens) {
    for (int num = 1; 2 * num < den; ++num) candidates.emplace_back(-static_cast<double>(num) / den, 0.0);
  }
  for (int den : dens) {
    for (int num = den / 2 + 1; num < 2 * den; ++num) {
      candidates.emplace_back(static_cast<double>(num) / den, 0.0);
      candidates.emplace_back(-static_cast<double>(num) / den, 0.0);
    }
  }
  // Rings around the zeros of the series arguments.
  for (const Expr* a : args) {
    if (a->kind != Expr::Kind::PFQ || a->fn.num().is_constant()) continue;
    for (const auto& r : numeric_roots(a->fn.num())) {
      const Complex z0(static_cast<double>(r.real()), static_cast<double>(r.imag()));
      for (double scale : {1.25, 2.0, 4.0, 8.0, 16.0}) {
        for (int k = 0; k < 12; ++k) {
          candidates.push_back(z0 + std::polar(margin * scale, (2 * k + 1) * M_PI / 12));
        }
      }
    }
  }
  std::vector<Complex> out;
  for (const double keep : {8 * margin, margin}) {
    for (const Complex& p : candidates) {
      if (static_cast<int>(out.size()) >= count) break;
      if (std::find(out.begin(), out.end(), p) != out.end()) continue;
      if (admissible(p, keep)) out.push_back(p);
    }
  }
  return out;
}

bool exact_equivalence_check(const Invariants& input, const SeedFamily& family, const TransformChain& chain) {
  return transform_invariants(seed_invariants(family), chain.map()) == input;
}

VerificationReport verify_solution(const Ode3& ode, const SeedFamily& family, const TransformChain& chain,
                                   const Basis& basis, const VerifyOptions& options) {
  VerificationReport r;
  r.series_order = options.series_order;
  r.exact_ok = exact_equivalence_check(invariants(ode), family, chain);
  if (!options.numeric) return r;
  for (int i = 0; i < 3; ++i) {
    const Expr& e = basis.elements[static_cast<std::size_t>(i)];
    const auto pts =
        contains_meijerg(e) ? std::vector<Complex>{} : sample_points(ode, e, options.points, options.series_order);
    NumericEntry n = residual_check(ode, e, pts, options.series_order);
    n.element = i;
    r.numeric.push_back(n);
  }
  return r;
}

}  // namespace hyper3
