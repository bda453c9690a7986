#pragma once

#include <gmpxx.h>

#include <string>

namespace hyper3 {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds a canonical rational n/d.
Rat make_rat(long n, long d = 1);

/// "p" or "p/q", the form every golden file uses.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

bool is_integer(const Rat& r);

/// Exact rational square root when r is a perfect square.
bool rational_sqrt(const Rat& r, Rat& root);

Rat abs(const Rat& r);

}  // namespace hyper3
