#ifndef DESCENT_INTEGER_HPP
#define DESCENT_INTEGER_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace descent {

/// Arbitrary-precision integer used throughout the library.
using Integer = mpz_class;

/// Parses an optionally signed decimal integer; throws Error(Errc::Parse) on junk.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline int sign(const Integer& n) { return sgn(n); }

/// n^e for a machine-size exponent.
inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Number of decimal digits of |n| (1 for zero).
inline std::size_t decimal_digits(const Integer& n) {
  if (n == 0) return 1;
  return n.get_str().size() - (n < 0 ? 1 : 0);
}

}  // namespace descent

#endif  // DESCENT_INTEGER_HPP
