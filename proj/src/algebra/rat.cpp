#include "hyper3/algebra/rat.hpp"

namespace hyper3 {

Rat make_rat(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool rational_sqrt(const Rat& r, Rat& root) {
  if (sgn(r) < 0) return false;
  if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(r.get_den().get_mpz_t())) {
    return false;
  }
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
  root = Rat(n, d);
  root.canonicalize();
  return true;
}

Rat abs(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

}  // namespace hyper3
