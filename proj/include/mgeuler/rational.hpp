#pragma once

#include <gmpxx.h>

#include <string>

namespace mgeuler {

// Exact coefficients. mpq_class keeps values canonical (reduced, positive
// denominator, zero as 0/1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms (the two-argument mpq_class constructor does not
// canonicalize).
inline Rational fraction(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

// Throws std::domain_error when r is not an integer.
Integer to_integer(const Rational& r, const char* context);

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace mgeuler
