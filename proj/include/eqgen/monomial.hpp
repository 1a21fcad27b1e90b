#ifndef EQGEN_MONOMIAL_HPP
#define EQGEN_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "eqgen/rational.hpp"
#include "eqgen/variables.hpp"

namespace eqgen {

// Sparse exponent vector over registered variables. Exponents are stored
// doubled (value 2*exponent), so half-integer powers like q^{1/2} stay on an
// exact integer lattice; an odd stored value marks a genuine half power.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::int64_t>;  // (variable, doubled exponent)

  Monomial() = default;

  // var^(num/2): exp2 is the doubled exponent.
  static Monomial var_pow2(VarId v, std::int64_t exp2);
  static Monomial var(VarId v, std::int64_t exp = 1) { return var_pow2(v, 2 * exp); }

  bool is_unit() const { return e_.empty(); }
  std::int64_t exp2(VarId v) const;
  bool contains(VarId v) const { return exp2(v) != 0; }
  const std::vector<Entry>& entries() const { return e_; }

  // True when the first present variable (smallest id) has positive exponent.
  // The unit monomial is not positive.
  bool positive_leading() const { return !e_.empty() && e_.front().second > 0; }

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  Monomial inverse() const;
  Monomial pow(std::int64_t k) const;  // k may be negative or zero
  // Halves every exponent; throws if that would leave the half-integer lattice.
  Monomial sqrt_exact() const;

  // Exponent substitution var -> c * target. Returns the scalar picked up
  // (c raised to this monomial's exponent of var) and the new monomial.
  // Throws std::domain_error when the result would leave the lattice
  // (e.g. a genuine half power of a non-square constant).
  std::pair<Rational, Monomial> substitute(VarId v, const Rational& c,
                                           const Monomial& target) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Entry> e_;  // sorted by VarId, no zero exponents
};

}  // namespace eqgen

#endif
