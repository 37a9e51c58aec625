#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace algtheta {

/// Exact rational number. GMP keeps it canonical (reduced, positive denominator).
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "-p" or "p/q". Throws InputError on anything else or on q == 0.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& r);

/// n/d in lowest terms. The two-argument mpq_class constructor does not reduce.
inline Rat make_rat(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat rat_pow(const Rat& base, int exponent);

}  // namespace algtheta
