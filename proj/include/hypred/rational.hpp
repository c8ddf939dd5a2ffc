#pragma once

// Exact rationals. Backed by GMP; every value is kept canonical (lowest terms,
// positive denominator).

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hypred/error.hpp"

namespace hypred {

using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Rat& x) { return x == 1; }
inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (decimal integers, optional surrounding spaces).
Rat parse_rat(std::string_view text);

/// Bit-exact "num/den" encoding; integers print as "num/1".
std::string encode_rat(const Rat& x);

/// Human form: "3", "-1/2".
std::string to_string(const Rat& x);

/// Integer value of x; x must be an integer that fits in a long.
long to_long(const Rat& x);

}  // namespace hypred
