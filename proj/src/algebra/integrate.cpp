#include "hyper3/algebra/integrate.hpp"

namespace hyper3 {

namespace {

Poly integrate_poly(const Poly& p) {
  std::vector<Rat> c(static_cast<std::size_t>(p.degree() + 2));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i + 1)] = p.coeff(i) / (i + 1);
  return Poly::from_coeffs(c);
}

// Interpolates the polynomial of degree <= n taking values ys at 0..n.
Poly interpolate(const std::vector<Rat>& ys) {
  // Newton divided differences on the nodes 0, 1, ..., n.
  std::vector<Rat> dd = ys;
  const std::size_t n = ys.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(k));
      if (i == k) break;
    }
  }
  Poly result(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * Poly::from_coeffs({Rat(-static_cast<long>(i)), Rat(1)}) + Poly(dd[i]);
  }
  return result;
}

}  // namespace

RatFn IntegralForm::derivative() const {
  RatFn d = rational_part.diff();
  for (const auto& t : log_terms) {
    if (!t.residue.is_rational()) continue;
    d += RatFn(t.argument.derivative(), t.argument) * RatFn(t.residue.rational_part());
  }
  if (remainder) d += *remainder;
  return d;
}

IntegralForm integrate_rational(const RatFn& w) {
  IntegralForm out;
  if (w.is_zero()) return out;
  auto [q, a] = divmod(w.num(), w.den());
  RatFn rational(integrate_poly(q));
  if (a.is_zero()) {
    out.rational_part = rational;
    return out;
  }

  // Hermite reduction (linear version).
  Poly d = w.den();
  const auto sqf = squarefree(d);
  for (const auto& [v, i] : sqf) {
    if (i < 2) continue;
    const Poly u = exact_div(d, v.pow(static_cast<unsigned>(i)));
    const Poly uv = u * v.derivative();
    for (int j = i - 1; j >= 1; --j) {
      auto [b, c] = solve_diophantine(uv, v, a * Rat(-1, j));
      rational += RatFn(b, v.pow(static_cast<unsigned>(j)));
      a = c * Rat(-j) - u * b.derivative();
    }
    d = u * v;
  }
  out.rational_part = rational;

  // Rothstein-Trager on a/d with d squarefree, deg a < deg d.
  const RatFn rest(a, d);
  if (rest.is_zero()) return out;
  const Poly& ra = rest.num();
  const Poly& rd = rest.den();
  const Poly dp = rd.derivative();
  const int n = rd.degree();
  std::vector<Rat> values(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) values[static_cast<std::size_t>(k)] = resultant(rd, ra - dp * Rat(k));
  const Poly res = interpolate(values);
  RatFn leftover = rest;
  for (const auto& c : rational_roots(res)) {
    const Poly v = poly_gcd(ra - dp * c, rd);
    if (v.degree() <= 0) continue;
    out.log_terms.push_back({AlgNum(c), v});
    leftover -= RatFn(v.derivative(), v) * RatFn(c);
  }
  if (!leftover.is_zero()) out.remainder = leftover;
  return out;
}

}  // namespace hyper3
