#pragma once

#include <random>

#include "hyper3/algebra/ratfn.hpp"

namespace hyper3::testing {

inline Rat rand_rat(std::mt19937_64& rng, long num_bound = 9, long den_bound = 5) {
  std::uniform_int_distribution<long> n(-num_bound, num_bound);
  std::uniform_int_distribution<long> d(1, den_bound);
  return make_rat(n(rng), d(rng));
}

inline Rat rand_nonzero_rat(std::mt19937_64& rng, long num_bound = 9, long den_bound = 5) {
  Rat r;
  do {
    r = rand_rat(rng, num_bound, den_bound);
  } while (sgn(r) == 0);
  return r;
}

inline Poly rand_poly(std::mt19937_64& rng, int max_degree, long bound = 9) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  std::vector<Rat> c(static_cast<std::size_t>(d + 1));
  for (auto& v : c) v = rand_rat(rng, bound, 3);
  c.back() = rand_nonzero_rat(rng, bound, 3);
  return Poly::from_coeffs(c);
}

inline Poly rand_poly_exact(std::mt19937_64& rng, int degree, long bound = 9) {
  std::vector<Rat> c(static_cast<std::size_t>(degree + 1));
  for (auto& v : c) v = rand_rat(rng, bound, 3);
  c.back() = rand_nonzero_rat(rng, bound, 3);
  return Poly::from_coeffs(c);
}

inline RatFn rand_ratfn(std::mt19937_64& rng, int max_degree, long bound = 9) {
  return RatFn(rand_poly(rng, max_degree, bound), rand_poly(rng, max_degree, bound));
}

inline RatFn rand_moebius(std::mt19937_64& rng) {
  while (true) {
    const Rat a = rand_rat(rng, 5, 3), b = rand_rat(rng, 5, 3);
    const Rat c = rand_rat(rng, 5, 3), d = rand_rat(rng, 5, 3);
    if (a * d - b * c == 0) continue;
    return RatFn(Poly::from_coeffs({b, a}), Poly::from_coeffs({d, c}));
  }
}

}  // namespace hyper3::testing
