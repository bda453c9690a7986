#include "hyper3/algebra/ratfn.hpp"

#include <numeric>
#include <stdexcept>

namespace hyper3 {

namespace {

// Power series of a/b (b(0) != 0) up to index n inclusive.
std::vector<Rat> series_div(const Poly& a, const Poly& b, int n) {
  std::vector<Rat> out(static_cast<std::size_t>(n + 1));
  const Rat b0 = b.coeff(0);
  for (int i = 0; i <= n; ++i) {
    Rat s = a.coeff(i);
    for (int j = 1; j <= i && j <= b.degree(); ++j) s -= b.coeff(j) * out[static_cast<std::size_t>(i - j)];
    out[static_cast<std::size_t>(i)] = s / b0;
  }
  return out;
}

int low_order(const Poly& p) {
  for (int i = 0; i <= p.degree(); ++i) {
    if (sgn(p.primitive()[static_cast<std::size_t>(i)]) != 0) return i;
  }
  return kInfiniteOrder;
}

Poly reversed(const Poly& p) {
  std::vector<Int> v(p.primitive().rbegin(), p.primitive().rend());
  return Poly::from_integers(std::move(v)) * p.content();
}

}  // namespace

RatFn::RatFn(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  if (den.is_constant()) {
    num_ = num * (Rat(1) / den.leading());
    den_ = Poly(Rat(1));
    return;
  }
  const Poly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
  } else {
    num_ = num;
    den_ = den;
  }
  const Rat lc = den_.leading();
  if (lc != 1) {
    const Rat inv = Rat(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    return *this = RatFn(num_ + o.num_, den_);
  }
  const Poly g = poly_gcd(den_, o.den_);
  if (g.degree() <= 0) {
    Poly n = num_ * o.den_ + o.num_ * den_;
    Poly d = den_ * o.den_;
    num_ = std::move(n);
    den_ = std::move(d);
    if (num_.is_zero()) den_ = Poly(Rat(1));
    return *this;
  }
  const Poly b1 = exact_div(den_, g);
  const Poly d1 = exact_div(o.den_, g);
  Poly n = num_ * d1 + o.num_ * b1;
  Poly d = b1 * o.den_;
  const Poly h = poly_gcd(n, g);
  if (h.degree() > 0) {
    n = exact_div(n, h);
    d = exact_div(d, h);
  }
  if (n.is_zero()) {
    num_ = Poly();
    den_ = Poly(Rat(1));
    return *this;
  }
  const Rat lc = d.leading();
  num_ = n * (Rat(1) / lc);
  den_ = d * (Rat(1) / lc);
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero() || o.is_zero()) return *this = RatFn();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  Poly a = num_, b = den_, c = o.num_, d = o.den_;
  const Poly g1 = poly_gcd(a, d);
  if (g1.degree() > 0) {
    a = exact_div(a, g1);
    d = exact_div(d, g1);
  }
  const Poly g2 = poly_gcd(c, b);
  if (g2.degree() > 0) {
    c = exact_div(c, g2);
    b = exact_div(b, g2);
  }
  Poly n = a * c;
  Poly dd = b * d;
  const Rat lc = dd.leading();
  num_ = n * (Rat(1) / lc);
  den_ = dd * (Rat(1) / lc);
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  RatFn inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  const Rat lc = inv.den_.leading();
  inv.num_ *= Rat(1) / lc;
  inv.den_ *= Rat(1) / lc;
  return *this *= inv;
}

RatFn RatFn::pow(int n) const {
  if (n < 0) return (RatFn(1) / *this).pow(-n);
  RatFn r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

RatFn RatFn::diff(int n) const {
  RatFn f = *this;
  for (int i = 0; i < n; ++i) {
    if (f.is_constant()) return RatFn();
    if (f.den_.is_constant()) {
      f.num_ = f.num_.derivative();
      continue;
    }
    const Poly db = f.den_.derivative();
    const Poly g = poly_gcd(f.den_, db);
    const Poly bg = exact_div(f.den_, g);
    const Poly dbg = exact_div(db, g);
    // numerator is coprime to f.den_ * bg (the squarefree-part argument)
    Poly num = f.num_.derivative() * bg - f.num_ * dbg;
    Poly den = f.den_ * bg;
    if (num.is_zero()) return RatFn();
    const Rat lc = den.leading();
    f.num_ = num * (Rat(1) / lc);
    f.den_ = den * (Rat(1) / lc);
  }
  return f;
}

RatFn RatFn::compose(const RatFn& g) const {
  if (is_constant()) return *this;
  if (g.is_constant()) return RatFn(eval(g.constant_value()));
  const Poly& p = g.num_;
  const Poly& q = g.den_;
  const int d = degree();
  std::vector<Poly> pp(static_cast<std::size_t>(d + 1)), qp(static_cast<std::size_t>(d + 1));
  pp[0] = Poly(Rat(1));
  qp[0] = Poly(Rat(1));
  for (int i = 1; i <= d; ++i) {
    pp[static_cast<std::size_t>(i)] = pp[static_cast<std::size_t>(i - 1)] * p;
    qp[static_cast<std::size_t>(i)] = q.is_constant() ? qp[0] : qp[static_cast<std::size_t>(i - 1)] * q;
  }
  auto homog = [&](const Poly& h) {
    Poly acc;
    for (int i = 0; i <= h.degree(); ++i) {
      const Rat c = h.coeff(i);
      if (sgn(c) == 0) continue;
      acc += pp[static_cast<std::size_t>(i)] * qp[static_cast<std::size_t>(d - i)] * c;
    }
    return acc;
  };
  Poly n = homog(num_);
  Poly m = homog(den_);
  // p, q coprime and num, den coprime make the homogenized pair coprime.
  RatFn r;
  const Rat lc = m.leading();
  r.num_ = n * (Rat(1) / lc);
  r.den_ = m * (Rat(1) / lc);
  return r;
}

RatFn RatFn::inflate(int k) const {
  RatFn r;
  r.num_ = num_.inflate(k);
  r.den_ = den_.inflate(k);
  return r;
}

RatFn RatFn::deflate(int k) const {
  RatFn r;
  r.num_ = num_.deflate(k);
  r.den_ = den_.deflate(k);
  return r;
}

Rat RatFn::eval(const Rat& t) const {
  const Rat d = den_.eval(t);
  if (sgn(d) == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(t) / d;
}

std::complex<double> RatFn::eval(std::complex<double> t) const {
  const auto tl = std::complex<long double>(t.real(), t.imag());
  const auto v = num_.eval(tl) / den_.eval(tl);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::string to_string(const RatFn& f) {
  if (f.den().is_constant()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

int exponent_support_gcd(const RatFn& f) {
  if (f.is_constant()) return 0;
  // f = g(x^k) iff num and den (coprime, den monic) are polynomials in x^k.
  return std::gcd(f.num().support_gcd(), f.den().support_gcd());
}

int order_at(const RatFn& f, const Rat& x0) {
  if (f.is_zero()) return kInfiniteOrder;
  return low_order(f.num().shift(x0)) - low_order(f.den().shift(x0));
}

int order_at_infinity(const RatFn& f) {
  if (f.is_zero()) return kInfiniteOrder;
  return f.den().degree() - f.num().degree();
}

Rat laurent_coeff(const RatFn& f, const Rat& x0, int n) {
  if (f.is_zero()) return Rat(0);
  const Poly a = f.num().shift(x0);
  const Poly b = f.den().shift(x0);
  const int va = low_order(a);
  const int vb = low_order(b);
  const int idx = n - (va - vb);
  if (idx < 0) return Rat(0);
  Poly a1 = va == 0 ? a : exact_div(a, Poly::monomial(Rat(1), va));
  Poly b1 = vb == 0 ? b : exact_div(b, Poly::monomial(Rat(1), vb));
  return series_div(a1, b1, idx).back();
}

Rat laurent_coeff_at_infinity(const RatFn& f, int n) {
  if (f.is_zero()) return Rat(0);
  const int shift = order_at_infinity(f);
  const int idx = n - shift;
  if (idx < 0) return Rat(0);
  return series_div(reversed(f.num()), reversed(f.den()), idx).back();
}

}  // namespace hyper3
