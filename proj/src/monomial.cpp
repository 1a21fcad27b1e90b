#include "eqgen/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqgen {

namespace {

Rational checked_rat_pow_half(const Rational& c, std::int64_t exp2) {
  // c raised to exp2/2. Integer exponents are plain powers; half exponents
  // need an exact rational square root.
  if (exp2 % 2 == 0) return rat_pow(c, exp2 / 2);
  if (c == 1) return Rational(1);
  auto s = rat_sqrt(c);
  if (!s) throw std::domain_error("substitution leaves the half-integer lattice");
  return rat_pow(*s, exp2);
}

}  // namespace

std::optional<Rational> rat_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && base == 0) throw std::domain_error("zero to a negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
  Rational out = inv ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

Monomial Monomial::var_pow2(VarId v, std::int64_t exp2) {
  Monomial m;
  if (exp2 != 0) m.e_.push_back({v, exp2});
  return m;
}

std::int64_t Monomial::exp2(VarId v) const {
  for (const auto& [id, e] : e_)
    if (id == v) return e;
  return 0;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  if (o.e_.empty()) return *this;
  std::vector<Entry> out;
  out.reserve(e_.size() + o.e_.size());
  auto a = e_.cbegin();
  auto b = o.e_.cbegin();
  while (a != e_.cend() || b != o.e_.cend()) {
    if (b == o.e_.cend() || (a != e_.cend() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == e_.cend() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      std::int64_t s = a->second + b->second;
      if (s != 0) out.push_back({a->first, s});
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
  return *this;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& [v, e] : m.e_) e = -e;
  return m;
}

Monomial Monomial::pow(std::int64_t k) const {
  if (k == 0) return Monomial();
  Monomial m = *this;
  for (auto& [v, e] : m.e_) e *= k;
  return m;
}

Monomial Monomial::sqrt_exact() const {
  Monomial m = *this;
  for (auto& [v, e] : m.e_) {
    if (e % 2 != 0) throw std::domain_error("square root leaves the half-integer lattice");
    e /= 2;
  }
  return m;
}

std::pair<Rational, Monomial> Monomial::substitute(VarId v, const Rational& c,
                                                   const Monomial& target) const {
  std::int64_t e2 = exp2(v);
  if (e2 == 0) return {Rational(1), *this};
  Monomial rest;
  rest.e_.reserve(e_.size());
  for (const auto& ent : e_)
    if (ent.first != v) rest.e_.push_back(ent);
  // target^(e2/2): doubled exponents of the target scale by e2/2 exactly
  // when target is on the integer lattice or e2 is even.
  Monomial scaled;
  scaled.e_.reserve(target.e_.size());
  for (const auto& [tv, te] : target.e_) {
    if ((te * e2) % 2 != 0)
      throw std::domain_error("substitution leaves the half-integer lattice");
    std::int64_t ne = te * e2 / 2;
    if (ne != 0) scaled.e_.push_back({tv, ne});
  }
  Rational f = checked_rat_pow_half(c, e2);
  return {f, rest * scaled};
}

}  // namespace eqgen
