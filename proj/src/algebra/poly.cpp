#include "hyper3/algebra/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace hyper3 {

namespace {

using ZVec = std::vector<Int>;
using UVec = std::vector<std::uint64_t>;

void trim(ZVec& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

void trim(UVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

ZVec zmul(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  ZVec c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

Int zcontent(const ZVec& v) {
  Int g = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Exact division over Z; returns false when b does not divide a.
bool zdivides(const ZVec& b, const ZVec& a, ZVec* quotient) {
  if (b.empty()) return false;
  if (a.empty()) {
    if (quotient) quotient->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  const Int& lb = b.back();
  if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return false;
  if (sgn(b.front()) != 0 && !mpz_divisible_p(a.front().get_mpz_t(), b.front().get_mpz_t())) {
    return false;
  }
  ZVec r = a;
  const std::size_t db = b.size() - 1;
  ZVec q(a.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    Int& top = r[k + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (sgn(r[i]) != 0) return false;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

// ---- arithmetic modulo word-sized primes ----

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

bool is_prime32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t nth_prime(std::size_t i) {
  static std::vector<std::uint64_t> cache;
  std::uint64_t candidate = cache.empty() ? (1ULL << 31) : cache.back();
  while (cache.size() <= i) {
    do {
      --candidate;
    } while (!is_prime32(candidate));
    cache.push_back(candidate);
  }
  return cache[i];
}

UVec reduce_mod(const ZVec& a, std::uint64_t p) {
  UVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trim(r);
  return r;
}

// r = a mod b, b monic
void rem_mod(UVec& a, const UVec& b, std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint64_t f = a.back();
    const std::size_t shift = a.size() - b.size();
    if (f != 0) {
      for (std::size_t j = 0; j < db; ++j) {
        a[shift + j] = (a[shift + j] + p - mulmod(f, b[j], p)) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
}

void make_monic(UVec& a, std::uint64_t p) {
  if (a.empty()) return;
  const std::uint64_t inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
}

UVec gcd_mod(UVec a, UVec b, std::uint64_t p) {
  make_monic(a, p);
  make_monic(b, p);
  while (!b.empty()) {
    rem_mod(a, b, p);
    make_monic(a, p);
    std::swap(a, b);
  }
  return a;
}

// gcd of primitive integer polynomials with positive leading coefficients.
ZVec gcd_primitive(const ZVec& a, const ZVec& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() == 1 || b.size() == 1) return {Int(1)};
  if (a == b) return a;
  if (a.size() >= b.size() ? zdivides(b, a, nullptr) : zdivides(a, b, nullptr)) {
    return a.size() >= b.size() ? b : a;
  }
  Int gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  ZVec acc;
  ZVec previous;
  Int modulus;
  std::size_t best_degree = std::min(a.size(), b.size());
  for (std::size_t pi = 0;; ++pi) {
    const std::uint64_t p = nth_prime(pi);
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) {
      continue;
    }
    UVec g = gcd_mod(reduce_mod(a, p), reduce_mod(b, p), p);
    const std::size_t d = g.size() - 1;
    if (d == 0) return {Int(1)};
    if (d > best_degree) continue;
    const std::uint64_t gp = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& c : g) c = mulmod(c, gp, p);
    if (d < best_degree || acc.empty()) {
      best_degree = d;
      acc.assign(g.size(), Int(0));
      for (std::size_t i = 0; i < g.size(); ++i) acc[i] = static_cast<unsigned long>(g[i]);
      modulus = static_cast<unsigned long>(p);
      previous.clear();
      continue;
    }
    const std::uint64_t minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t cur = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
      const std::uint64_t t = mulmod((g[i] + p - cur) % p, minv, p);
      mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(t));
    }
    modulus *= static_cast<unsigned long>(p);
    Int half = modulus / 2;
    ZVec sym(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) sym[i] = acc[i] > half ? Int(acc[i] - modulus) : acc[i];
    if (sym == previous) {
      Int c = zcontent(sym);
      if (sgn(sym.back()) < 0) c = -c;
      for (auto& v : sym) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
      if (zdivides(sym, a, nullptr) && zdivides(sym, b, nullptr)) return sym;
    }
    previous = std::move(sym);
  }
}

std::vector<Rat> to_rats(const Poly& p) {
  std::vector<Rat> v(p.primitive().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.content() * Rat(p.primitive()[i]);
  return v;
}

long double to_ld(const Int& z) {
  long exp = 0;
  const double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::ldexp(static_cast<long double>(m), static_cast<int>(exp));
}

}  // namespace

// ---------------------------------------------------------------------------

Poly::Poly(const Rat& c) {
  if (sgn(c) != 0) {
    content_ = c;
    prim_.assign(1, Int(1));
  }
}

Poly Poly::x() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& c, int exponent) {
  Poly p;
  if (sgn(c) == 0) return p;
  p.content_ = c;
  p.prim_.assign(static_cast<std::size_t>(exponent) + 1, Int(0));
  p.prim_.back() = 1;
  return p;
}

void Poly::normalize_from(ZVec ints, const Rat& scale) {
  trim(ints);
  if (ints.empty() || sgn(scale) == 0) {
    prim_.clear();
    content_ = 0;
    return;
  }
  Int g = zcontent(ints);
  if (sgn(ints.back()) < 0) g = -g;
  if (g != 1) {
    for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  prim_ = std::move(ints);
  content_ = scale * Rat(g);
}

Poly Poly::from_integers(std::vector<Int> ascending) {
  Poly p;
  p.normalize_from(std::move(ascending), Rat(1));
  return p;
}

Poly Poly::from_coeffs(const std::vector<Rat>& ascending) {
  Int den = 1;
  for (const auto& c : ascending) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZVec ints(ascending.size());
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    ints[i] = ascending[i].get_num() * (den / ascending[i].get_den());
  }
  Poly p;
  p.normalize_from(std::move(ints), Rat(Int(1), den));
  return p;
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return content_ * Rat(prim_[static_cast<std::size_t>(i)]);
}

Rat Poly::leading() const { return is_zero() ? Rat(0) : content_ * Rat(prim_.back()); }

std::vector<std::pair<int, Rat>> Poly::terms() const {
  std::vector<std::pair<int, Rat>> out;
  for (int i = degree(); i >= 0; --i) {
    if (sgn(prim_[static_cast<std::size_t>(i)]) != 0) out.emplace_back(i, coeff(i));
  }
  return out;
}

int Poly::support_gcd() const {
  int g = 0;
  for (int i = 1; i <= degree(); ++i) {
    if (sgn(prim_[static_cast<std::size_t>(i)]) != 0) g = std::gcd(g, i);
  }
  return g;
}

Poly Poly::operator-() const {
  Poly p = *this;
  p.content_ = -p.content_;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  // a*A + b*B with a = na/da, b = nb/db
  const Int& na = content_.get_num();
  const Int& da = content_.get_den();
  const Int& nb = o.content_.get_num();
  const Int& db = o.content_.get_den();
  Int gn, l;
  mpz_gcd(gn.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  const Int fa = (na / gn) * (l / da);
  const Int fb = (nb / gn) * (l / db);
  ZVec sum(std::max(prim_.size(), o.prim_.size()));
  for (std::size_t i = 0; i < prim_.size(); ++i) sum[i] = fa * prim_[i];
  for (std::size_t i = 0; i < o.prim_.size(); ++i) {
    mpz_addmul(sum[i].get_mpz_t(), fb.get_mpz_t(), o.prim_[i].get_mpz_t());
  }
  normalize_from(std::move(sum), Rat(gn, l));
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  if (a.is_zero() || b.is_zero()) return p;
  // Gauss: the product of primitive polynomials is primitive.
  p.prim_ = zmul(a.prim_, b.prim_);
  p.content_ = a.content_ * b.content_;
  return p;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    prim_.clear();
    content_ = 0;
  } else if (!is_zero()) {
    content_ *= c;
  }
  return *this;
}

Poly Poly::derivative() const {
  if (degree() <= 0) return Poly();
  ZVec d(prim_.size() - 1);
  for (std::size_t i = 1; i < prim_.size(); ++i) d[i - 1] = prim_[i] * static_cast<unsigned long>(i);
  Poly p;
  p.normalize_from(std::move(d), content_);
  return p;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  p.content_ = Rat(Int(1), prim_.back());
  return p;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  Poly p = *this;
  p.content_ = 1;
  return p;
}

Poly Poly::pow(unsigned n) const {
  Poly result(Rat(1));
  Poly base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

Poly Poly::compose(const Poly& q) const {
  Poly r;
  for (int i = degree(); i >= 0; --i) {
    r *= q;
    r += Poly(coeff(i));
  }
  return r;
}

Poly Poly::inflate(int k) const {
  if (k == 1 || is_zero()) return *this;
  Poly p;
  p.content_ = content_;
  p.prim_.assign(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(k) + 1, Int(0));
  for (std::size_t i = 0; i < prim_.size(); ++i) p.prim_[i * static_cast<std::size_t>(k)] = prim_[i];
  return p;
}

Poly Poly::deflate(int k) const {
  if (k == 1 || is_zero()) return *this;
  const int g = support_gcd();
  if (g != 0 && g % k != 0) throw std::domain_error("deflate: support not divisible");
  Poly p;
  p.content_ = content_;
  p.prim_.assign(static_cast<std::size_t>(degree() / k) + 1, Int(0));
  for (std::size_t i = 0; i < p.prim_.size(); ++i) p.prim_[i] = prim_[i * static_cast<std::size_t>(k)];
  return p;
}

Poly Poly::shift(const Rat& a) const {
  if (sgn(a) == 0 || degree() <= 0) return *this;
  // Horner on the integer part: prim(x + n/d) scaled by d^deg stays integral.
  const Int& n = a.get_num();
  const Int& d = a.get_den();
  const std::size_t deg = prim_.size() - 1;
  // c(x) = sum prim_i (d x + n)^i d^(deg-i) = d^deg * prim(x + n/d)
  ZVec acc(1, prim_.back());
  Int dpow = 1;
  for (std::size_t i = deg; i-- > 0;) {
    dpow *= d;
    ZVec next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      mpz_addmul(next[j + 1].get_mpz_t(), acc[j].get_mpz_t(), d.get_mpz_t());
      mpz_addmul(next[j].get_mpz_t(), acc[j].get_mpz_t(), n.get_mpz_t());
    }
    mpz_addmul(next[0].get_mpz_t(), prim_[i].get_mpz_t(), dpow.get_mpz_t());
    acc = std::move(next);
  }
  Poly p;
  p.normalize_from(std::move(acc), content_ / Rat(dpow));
  return p;
}

Rat Poly::eval(const Rat& t) const {
  if (is_zero()) return Rat(0);
  const Int& n = t.get_num();
  const Int& d = t.get_den();
  Int v = prim_.back();
  Int dpow = 1;
  for (std::size_t i = prim_.size() - 1; i-- > 0;) {
    dpow *= d;
    v *= n;
    mpz_addmul(v.get_mpz_t(), prim_[i].get_mpz_t(), dpow.get_mpz_t());
  }
  Rat r(v, dpow);
  r.canonicalize();
  return r * content_;
}

std::complex<long double> Poly::eval(std::complex<long double> t) const {
  std::complex<long double> v = 0;
  for (std::size_t i = prim_.size(); i-- > 0;) v = v * t + to_ld(prim_[i]);
  return v * static_cast<long double>(content_.get_d());
}

std::complex<double> Poly::eval(std::complex<double> t) const {
  const auto v = eval(std::complex<long double>(t.real(), t.imag()));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const Rat mag = neg ? Rat(-c) : c;
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "x";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  // Work with primitive parts over Z using pseudo-steps, scaling by lc(b).
  std::vector<Rat> r = to_rats(a);
  const std::vector<Rat> bv = to_rats(b);
  const int db = b.degree();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat lb = bv.back();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rat f = r[static_cast<std::size_t>(k + db)] / lb;
    q[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * bv[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly::from_coeffs(q), Poly::from_coeffs(r)};
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return Poly();
  ZVec q;
  if (!zdivides(b.primitive(), a.primitive(), &q)) throw std::domain_error("exact_div: not divisible");
  Poly p = Poly::from_integers(std::move(q));
  return p * (a.content() / b.content());
}

bool divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  return zdivides(b.primitive(), a.primitive(), nullptr);
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return Poly::from_integers(gcd_primitive(a.primitive(), b.primitive())).monic();
}

Poly poly_gcd_euclid(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::pair<Poly, Poly> solve_diophantine(const Poly& a, const Poly& b, const Poly& c) {
  // extended Euclid: s*a + t*b = g
  Poly r0 = a, r1 = b, s0(Rat(1)), s1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rat lc = r0.leading();
  const Poly g = r0 * (Rat(1) / lc);
  s0 *= Rat(1) / lc;
  auto [cq, cr] = divmod(c, g);
  if (!cr.is_zero()) throw std::domain_error("solve_diophantine: gcd does not divide rhs");
  Poly s = s0 * cq;
  if (!b.is_constant()) s = divmod(s, b).second;
  else s = Poly();
  Poly t = exact_div(c - s * a, b);
  return {s, t};
}

Rat resultant(const Poly& a0, const Poly& b0) {
  if (a0.is_zero() || b0.is_zero()) return Rat(0);
  Poly a = a0, b = b0;
  Rat acc(1);
  while (true) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) {
      Rat lb = b.leading();
      Rat p(1);
      for (int i = 0; i < da; ++i) p *= lb;
      return acc * p;
    }
    if (da == 0) {
      Rat la = a.leading();
      Rat p(1);
      for (int i = 0; i < db; ++i) p *= la;
      return acc * p;
    }
    Poly r = divmod(a, b).second;
    if (r.is_zero()) return Rat(0);
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    const Rat lb = b.leading();
    for (int i = 0; i < da - r.degree(); ++i) acc *= lb;
    a = std::move(b);
    b = std::move(r);
  }
}

std::vector<std::pair<Poly, int>> squarefree(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  const Poly f = p.monic();
  const Poly fp = f.derivative();
  const Poly a0 = poly_gcd(f, fp);
  Poly b = exact_div(f, a0);
  Poly c = exact_div(fp, a0);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly a = poly_gcd(b, d);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    ++i;
  }
  return out;
}

std::vector<std::complex<long double>> numeric_roots(const Poly& p) {
  using C = std::complex<long double>;
  const int n = p.degree();
  std::vector<C> roots;
  if (n <= 0) return roots;
  std::vector<long double> c(p.primitive().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_ld(p.primitive()[i]);
  const long double lead = c.back();
  for (auto& v : c) v /= lead;
  if (n == 1) {
    roots.emplace_back(-c[0]);
    return roots;
  }
  long double radius = 0;
  for (int i = 0; i < n; ++i) {
    const long double m = std::fabs(c[static_cast<std::size_t>(i)]);
    if (m > 0) radius = std::max(radius, std::pow(m, 1.0L / static_cast<long double>(n - i)));
  }
  if (radius == 0) radius = 1;
  roots.resize(static_cast<std::size_t>(n));
  const long double two_pi = 6.283185307179586476925286766559L;
  for (int k = 0; k < n; ++k) {
    const long double ang = two_pi * (k + 0.25L) / n + 0.4L;
    roots[static_cast<std::size_t>(k)] = std::polar(radius, ang);
  }
  auto eval_with_deriv = [&](C z, C& v, C& dv) {
    v = 1;
    dv = 0;
    for (int i = n - 1; i >= 0; --i) {
      dv = dv * z + v;
      v = v * z + c[static_cast<std::size_t>(i)];
    }
  };
  for (int iter = 0; iter < 800; ++iter) {
    long double max_step = 0;
    for (int k = 0; k < n; ++k) {
      C& z = roots[static_cast<std::size_t>(k)];
      C v, dv;
      eval_with_deriv(z, v, dv);
      if (v == C(0)) continue;
      const C ratio = v / dv;
      C sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) {
          const C diff = z - roots[static_cast<std::size_t>(j)];
          if (diff != C(0)) sum += C(1) / diff;
        }
      }
      const C step = ratio / (C(1) - ratio * sum);
      z -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z)));
    }
    if (max_step < 1e-17L) break;
  }
  return roots;
}

namespace {

void try_candidate(const Poly& f, const Rat& cand, std::vector<Rat>& found) {
  for (const auto& r : found) {
    if (r == cand) return;
  }
  if (sgn(f.eval(cand)) == 0) found.push_back(cand);
}

void candidates_from_real(const Poly& f, long double x, std::vector<Rat>& found) {
  const Int& lc = f.primitive().back();
  // denominators of rational roots divide lc
  if (mpz_sizeinbase(lc.get_mpz_t(), 2) < 60) {
    const long double m = std::round(x * to_ld(lc));
    if (std::fabs(m) < 9.0e18L) {
      Rat cand(Int(static_cast<long>(m)), lc);
      cand.canonicalize();
      try_candidate(f, cand, found);
    }
  }
  // continued-fraction convergents
  long double y = x;
  Int h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  for (int step = 0; step < 40; ++step) {
    const long double a = std::floor(y);
    if (std::fabs(a) > 9.0e18L) break;
    const Int ai(static_cast<long>(a));
    Int h = ai * h0 + h1;
    Int k = ai * k0 + k1;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    if (k0 > lc) break;
    if (mpz_divisible_p(lc.get_mpz_t(), k0.get_mpz_t())) {
      Rat cand(h0, k0);
      cand.canonicalize();
      try_candidate(f, cand, found);
    }
    const long double frac = y - a;
    if (std::fabs(frac) < 1e-30L) break;
    y = 1.0L / frac;
  }
}

}  // namespace

std::vector<Rat> rational_roots(const Poly& p) {
  std::vector<Rat> found;
  if (p.degree() <= 0) return found;
  Poly f = exact_div(p, poly_gcd(p, p.derivative()));
  if (sgn(f.coeff(0)) == 0) {
    found.emplace_back(0);
    f = exact_div(f, Poly::x());
  }
  // Deflate as roots appear so the numeric stage works on smaller problems.
  for (int round = 0; round < 8 && f.degree() >= 1; ++round) {
    if (f.degree() == 1) {
      found.push_back(-f.coeff(0) / f.coeff(1));
      break;
    }
    std::size_t before = found.size();
    for (const auto& z : numeric_roots(f)) {
      if (std::fabs(z.imag()) > 1e-6L * (1.0L + std::abs(z))) continue;
      candidates_from_real(f, z.real(), found);
    }
    if (found.size() == before) break;
    for (std::size_t i = before; i < found.size(); ++i) {
      f = exact_div(f, Poly::from_coeffs({-found[i], Rat(1)}));
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<FactorEntry> squarefree_and_rational_roots(const Poly& p) {
  std::vector<FactorEntry> out;
  std::vector<FactorEntry> nonlinear;
  for (auto& [f, m] : squarefree(p)) {
    Poly rest = f;
    for (const auto& r : rational_roots(f)) {
      Poly lin = Poly::from_coeffs({-r, Rat(1)});
      rest = exact_div(rest, lin);
      out.push_back({lin, m, true, r});
    }
    if (rest.degree() > 0) nonlinear.push_back({rest.monic(), m, false, Rat(0)});
  }
  std::sort(out.begin(), out.end(), [](const FactorEntry& a, const FactorEntry& b) { return a.root < b.root; });
  out.insert(out.end(), nonlinear.begin(), nonlinear.end());
  return out;
}

}  // namespace hyper3
