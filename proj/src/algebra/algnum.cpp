#include "hyper3/algebra/algnum.hpp"

#include <cmath>
#include <stdexcept>

namespace hyper3 {

namespace {

// Writes n = s^2 * core with core squarefree; factoring uses trial division
// and falls back to leaving a large cofactor intact (it still gives a
// canonical radicand as long as the cofactor is not a square).
void square_split(const Int& n, Int& s, Int& core) {
  Int m = n;
  const int sign = sgn(m);
  if (sign < 0) m = -m;
  s = 1;
  core = 1;
  for (unsigned long p = 2; p < 100000 && Int(p) * p <= m; ++p) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) core *= p;
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      Int r;
      mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
      s *= r;
    } else {
      core *= m;
    }
  }
  if (sign < 0) core = -core;
}

}  // namespace

AlgNum AlgNum::quadratic(const Rat& p, const Rat& q, const Rat& d) {
  AlgNum a(p);
  if (sgn(q) == 0 || sgn(d) == 0) return a;
  // sqrt(n/m) = sqrt(n*m)/m
  const Int nm = d.get_num() * d.get_den();
  Int s, core;
  square_split(nm, s, core);
  Rat factor(s, d.get_den());
  factor.canonicalize();
  if (core == 1) {
    a.p_ += q * factor;
    return a;
  }
  a.q_ = q * factor;
  a.d_ = core;
  return a;
}

AlgNum AlgNum::sqrt(const Rat& r) { return quadratic(Rat(0), Rat(1), r); }

void AlgNum::unify(const AlgNum& o) {
  if (o.is_rational()) return;
  if (is_rational()) {
    d_ = o.d_;
    return;
  }
  if (d_ != o.d_) throw std::domain_error("AlgNum: values from different quadratic fields");
}

AlgNum AlgNum::operator-() const {
  AlgNum a = *this;
  a.p_ = -a.p_;
  a.q_ = -a.q_;
  return a;
}

AlgNum& AlgNum::operator+=(const AlgNum& o) {
  unify(o);
  p_ += o.p_;
  q_ += o.q_;
  if (sgn(q_) == 0) d_ = 0;
  return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) { return *this += -o; }

AlgNum& AlgNum::operator*=(const AlgNum& o) {
  unify(o);
  const Rat np = p_ * o.p_ + q_ * o.q_ * Rat(d_);
  const Rat nq = p_ * o.q_ + q_ * o.p_;
  p_ = np;
  q_ = nq;
  if (sgn(q_) == 0) d_ = 0;
  return *this;
}

AlgNum& AlgNum::operator/=(const AlgNum& o) {
  const Rat norm = o.p_ * o.p_ - o.q_ * o.q_ * Rat(o.is_rational() ? Int(0) : o.d_);
  if (sgn(norm) == 0) throw std::domain_error("AlgNum division by zero");
  *this *= o.conjugate();
  p_ /= norm;
  q_ /= norm;
  return *this;
}

AlgNum AlgNum::conjugate() const {
  AlgNum a = *this;
  a.q_ = -a.q_;
  return a;
}

std::complex<double> AlgNum::to_complex() const {
  if (is_rational()) return {p_.get_d(), 0.0};
  const double r = std::sqrt(std::fabs(d_.get_d()));
  if (sgn(d_) > 0) return {p_.get_d() + q_.get_d() * r, 0.0};
  return {p_.get_d(), q_.get_d() * r};
}

bool AlgNum::canonical_less(const AlgNum& a, const AlgNum& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  if (a.is_rational()) return a.p_ < b.p_;
  if (a.d_ != b.d_) return a.d_ < b.d_;
  if (a.p_ != b.p_) return a.p_ < b.p_;
  return a.q_ < b.q_;
}

std::string to_string(const AlgNum& a) {
  if (a.is_rational()) return to_string(a.rational_part());
  std::string s;
  if (sgn(a.rational_part()) != 0) {
    s = to_string(a.rational_part());
    s += sgn(a.surd_coeff()) < 0 ? " - " : " + ";
    s += to_string(abs(a.surd_coeff()));
  } else {
    s = to_string(a.surd_coeff());
  }
  return s + "*sqrt(" + to_string(a.radicand()) + ")";
}

std::vector<AlgNum> quadratic_roots(const Rat& a, const Rat& b, const Rat& c) {
  const Rat disc = b * b - 4 * a * c;
  const Rat half = Rat(1) / (2 * a);
  Rat root;
  if (rational_sqrt(disc, root)) {
    Rat r1 = (-b - root) * half;
    Rat r2 = (-b + root) * half;
    if (r1 > r2) std::swap(r1, r2);
    if (r1 == r2) return {AlgNum(r1)};
    return {AlgNum(r1), AlgNum(r2)};
  }
  const AlgNum s = AlgNum::quadratic(Rat(0), half, disc);
  const AlgNum base(-b * half);
  std::vector<AlgNum> out{base - s, base + s};
  if (AlgNum::canonical_less(out[1], out[0])) std::swap(out[0], out[1]);
  return out;
}

}  // namespace hyper3
