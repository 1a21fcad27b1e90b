#ifndef EQGEN_RATIONAL_HPP
#define EQGEN_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

namespace eqgen {

// All coefficients in the engine are exact rationals. GMP does the heavy
// lifting; this header only adds the few helpers the rest of the code needs.

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat_from_string(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

// Decimal "p/q" (or "p" for integers), the wire format used everywhere.
inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) {
  return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0;
}

// Exact square root of a nonnegative rational, if one exists.
std::optional<Rational> rat_sqrt(const Rational& r);

// Exact integer power, negative exponents allowed for nonzero base.
Rational rat_pow(const Rational& base, long e);

}  // namespace eqgen

#endif
