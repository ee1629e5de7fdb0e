#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace conjdim {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical p/q with q > 0 and gcd(|p|, q) = 1.  Throws DivisionByZero on q = 0.
Rational rational_normalize(const Integer& p, const Integer& q);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

/// True iff q = r^2 for some rational r.
bool rational_is_square(const Rational& q);

bool integer_is_square(const Integer& z);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, long e);

/// Least common multiple of denominators; 1 for an empty range.
template <class Range>
Integer denominator_lcm(const Range& values) {
  Integer l = 1;
  for (const Rational& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

std::uint64_t hash_integer(const Integer& z);
std::uint64_t hash_rational(const Rational& q);

}  // namespace conjdim
