#ifndef EQGEN_SERIES_HPP
#define EQGEN_SERIES_HPP

#include <functional>
#include <map>
#include <vector>

#include "eqgen/factored.hpp"

namespace eqgen {

// Truncated formal series in designated grading variables with exact
// FactoredRational coefficients. Grading exponents are plain nonnegative
// integers with an independent cutoff per variable; everything is exact
// modulo the cutoff ideal.
class TruncatedSeries {
 public:
  using Expo = std::vector<int>;  // aligned with gvars()

  TruncatedSeries() = default;
  TruncatedSeries(std::vector<VarId> gvars, std::vector<int> cutoffs);
  static TruncatedSeries unit(std::vector<VarId> gvars, std::vector<int> cutoffs);

  const std::vector<VarId>& gvars() const { return gvars_; }
  const std::vector<int>& cutoffs() const { return cutoffs_; }
  const std::map<Expo, FactoredRational>& terms() const { return c_; }

  void set(const Expo& e, FactoredRational v);     // overwrites
  void add(const Expo& e, const FactoredRational& v);
  // Exact coefficient (zero when absent); throws on an out-of-cutoff query.
  FactoredRational coefficient(const Expo& e) const;
  FactoredRational coefficient_of(VarId v, int exp) const;  // single-variable shorthand
  bool within(const Expo& e) const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  TruncatedSeries& mul_coeff(const FactoredRational& f);
  TruncatedSeries& mul_scalar(const Rational& c);

  // exp needs a vanishing constant term; log needs constant term 1.
  TruncatedSeries exp() const;
  TruncatedSeries log() const;
  TruncatedSeries inverse() const;  // constant term must be invertible (single term / binomial)
  TruncatedSeries pow(int k) const;

  // Adams operation: every exponent (grading, coefficient, denominator)
  // multiplied by k; grading terms pushed past a cutoff are dropped.
  TruncatedSeries adams(std::int64_t k) const;
  // Plethystic exponential exp(sum_m adams_m(s)/m); constant term must vanish.
  TruncatedSeries pe() const;

  // Root-of-unity average realized as exponent filtering: terms whose
  // exponent of v is not divisible by n are deleted, the rest kept verbatim.
  // For a coefficient variable the denominators must not involve v.
  TruncatedSeries roots_filter(VarId v, std::int64_t n) const;
  // Keeps grading exponents divisible by l and divides them by l.
  TruncatedSeries grading_select_divide(VarId gv, int l) const;

  TruncatedSeries substitute(VarId v, const Rational& c, const Monomial& target) const;
  // Coefficient of gv^k gains a factor (c*m)^k.
  TruncatedSeries scale_grading(VarId gv, const Rational& c, const Monomial& m) const;
  // Sets a grading variable to zero/removes it (keeps the slice gv^value).
  TruncatedSeries restrict_grading(VarId gv, int value) const;
  TruncatedSeries with_gvar(VarId gv, int cutoff) const;  // embeds, new variable unused so far
  TruncatedSeries rename_gvar(VarId from, VarId to) const;
  TruncatedSeries retruncate(const std::vector<int>& cutoffs) const;

  bool equals(const TruncatedSeries& o) const;  // same gradings, coefficientwise
  bool operator==(const TruncatedSeries& o) const { return equals(o); }

  std::size_t gvar_index(VarId v) const;  // throws when absent

 private:
  void check_compatible(const TruncatedSeries& o) const;
  int total_cutoff() const;

  std::vector<VarId> gvars_;   // sorted by id
  std::vector<int> cutoffs_;
  std::map<Expo, FactoredRational> c_;  // no stored zero coefficients
};

}  // namespace eqgen

#endif
