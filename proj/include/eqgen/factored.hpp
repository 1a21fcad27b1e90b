#ifndef EQGEN_FACTORED_HPP
#define EQGEN_FACTORED_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eqgen/laurent.hpp"

namespace eqgen {

// Substituting a value that sends some denominator binomial to zero. The
// formulas computed here never do this on their own; hitting it is a usage
// error reported loudly instead of a limit being taken.
struct SingularSpecialization : std::domain_error {
  using std::domain_error::domain_error;
};

// One denominator atom (1 - coef*mono). Kept normalized: mono is not the
// unit and its leading variable has positive exponent; the rewrite
// (1 - m^{-1}) = -m^{-1}(1 - m) is applied on entry with the sign and
// monomial folded into the numerator.
struct DenomFactor {
  Monomial mono;
  Rational coef;
  bool operator==(const DenomFactor& o) const { return mono == o.mono && coef == o.coef; }
  bool operator<(const DenomFactor& o) const {
    if (mono != o.mono) return mono < o.mono;
    return mpq_cmp(coef.get_mpq_t(), o.coef.get_mpq_t()) < 0;
  }
};

// Exact rational function: Laurent numerator over a multiset of normalized
// binomial atoms. Field arithmetic never computes a multivariate gcd;
// equality is decided by cross-multiplying numerators against the opposite
// denominators after cancelling the common atoms.
class FactoredRational {
 public:
  FactoredRational() = default;  // zero
  explicit FactoredRational(const Rational& c) : num_(c) {}
  explicit FactoredRational(LaurentPoly p) : num_(std::move(p)) {}
  static FactoredRational one() { return FactoredRational(Rational(1)); }
  static FactoredRational term(const Rational& c, const Monomial& m) {
    return FactoredRational(LaurentPoly::term(c, m));
  }

  bool is_zero() const { return num_.is_zero(); }
  const LaurentPoly& num() const { return num_; }
  const std::map<DenomFactor, int>& den() const { return den_; }

  // Multiply / divide by (1 - c*m)^k with normalization and cancellation
  // against the opposite side of the fraction.
  FactoredRational& mul_one_minus(const Rational& c, const Monomial& m, int k = 1);
  FactoredRational& div_one_minus(const Rational& c, const Monomial& m, int k = 1);
  FactoredRational& mul_term(const Rational& c, const Monomial& m);
  FactoredRational& mul_scalar(const Rational& c);

  FactoredRational operator+(const FactoredRational& o) const;
  FactoredRational operator-(const FactoredRational& o) const;
  FactoredRational operator*(const FactoredRational& o) const;
  // Division requires the divisor's numerator to be a single term or a
  // binomial (everything this engine divides by has that shape).
  FactoredRational operator/(const FactoredRational& o) const;
  FactoredRational operator-() const;
  FactoredRational& operator+=(const FactoredRational& o) { return *this = *this + o; }
  FactoredRational& operator-=(const FactoredRational& o) { return *this = *this - o; }
  FactoredRational& operator*=(const FactoredRational& o) { return *this = *this * o; }
  FactoredRational& operator/=(const FactoredRational& o) { return *this = *this / o; }
  FactoredRational pow(int k) const;  // negative k allowed under the div rules

  bool equals(const FactoredRational& o) const;
  bool operator==(const FactoredRational& o) const { return equals(o); }
  bool is_one() const { return equals(one()); }

  FactoredRational adams(std::int64_t k) const;
  FactoredRational substitute(VarId v, const Rational& c, const Monomial& target) const;

  // Clears the denominator by exact division; nullopt when the value is not
  // a Laurent polynomial.
  std::optional<LaurentPoly> to_laurent() const;
  // Cancels denominator atoms that divide the numerator exactly.
  FactoredRational cancelled() const;

  // Slices by the doubled exponent of v. Requires a v-free denominator.
  std::map<std::int64_t, FactoredRational> split_by_var(VarId v) const;
  bool depends_on(VarId v) const;

  // Laurent slices of the expansion in v around zero, kept within the
  // doubled-exponent window [lo2, hi2]. Unlike split_by_var this declares an
  // expansion direction: denominator atoms are oriented to positive powers
  // of v and expanded geometrically; the slice coefficients stay exact
  // rational functions of the other variables.
  std::map<std::int64_t, FactoredRational> expand_in_var(VarId v, std::int64_t lo2,
                                                         std::int64_t hi2) const;

 private:
  LaurentPoly num_;
  std::map<DenomFactor, int> den_;  // atom -> multiplicity >= 1
};

}  // namespace eqgen

#endif
