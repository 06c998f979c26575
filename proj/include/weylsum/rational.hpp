#pragma once

#include <gmpxx.h>

#include <string>

namespace weylsum {

/* Exact rational scalar.  GMP keeps the canonical form (denominator > 0,
   gcd(num, den) = 1) after every arithmetic operation; the factories below
   canonicalize the raw constructors that do not. */
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "p/q", or bare "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text);

// q^e by repeated multiplication; exponents here are small.
Rational rat_pow(const Rational& q, unsigned e);

}  // namespace weylsum
