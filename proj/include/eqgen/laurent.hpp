#ifndef EQGEN_LAURENT_HPP
#define EQGEN_LAURENT_HPP

#include <map>
#include <optional>

#include "eqgen/monomial.hpp"

namespace eqgen {

// Sparse exact Laurent polynomial: monomial -> nonzero rational. No floating
// point anywhere; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);
  static LaurentPoly term(const Rational& c, const Monomial& m);
  static LaurentPoly one() { return LaurentPoly(Rational(1)); }

  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  Rational coefficient(const Monomial& m) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const;
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& mul_term(const Rational& c, const Monomial& m);
  LaurentPoly& mul_scalar(const Rational& c);
  void add_term(const Rational& c, const Monomial& m);

  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }

  // Every exponent multiplied by k (the Adams substitution on variables).
  LaurentPoly adams(std::int64_t k) const;
  LaurentPoly substitute(VarId v, const Rational& c, const Monomial& target) const;
  // Keeps the terms whose exponent of v is an integer multiple of n.
  LaurentPoly filter_var_multiples(VarId v, std::int64_t n) const;
  // Slices by the doubled exponent of v; v is removed from the keys.
  std::map<std::int64_t, LaurentPoly> split_by_var(VarId v) const;
  bool depends_on(VarId v) const;
  // Largest/smallest doubled exponent of v over the support (0 when absent).
  std::int64_t max_exp2(VarId v) const;
  std::int64_t min_exp2(VarId v) const;

  // Exact division by the binomial (1 - c*m), m not the unit. Returns the
  // quotient when the division is exact, nullopt otherwise. Works per orbit
  // of translation by m's exponent vector (synthetic division), so it
  // terminates on any Laurent input.
  std::optional<LaurentPoly> divide_one_minus(const Rational& c, const Monomial& m) const;

 private:
  std::map<Monomial, Rational> t_;
};

}  // namespace eqgen

#endif
