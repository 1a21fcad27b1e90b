#include "eqgen/laurent.hpp"

#include <stdexcept>

namespace eqgen {

namespace {
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}
}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) t_.emplace(Monomial(), c);
}

LaurentPoly LaurentPoly::term(const Rational& c, const Monomial& m) {
  LaurentPoly p;
  if (c != 0) p.t_.emplace(m, c);
  return p;
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Rational& c, const Monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(c, m);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(-c, m);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [m, c] : p.t_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) out.add_term(ca * cb, ma * mb);
  return out;
}

LaurentPoly& LaurentPoly::mul_term(const Rational& c, const Monomial& m) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  std::map<Monomial, Rational> out;
  for (const auto& [mm, cc] : t_) out.emplace(mm * m, cc * c);
  t_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::mul_scalar(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, cc] : t_) cc *= c;
  return *this;
}

LaurentPoly LaurentPoly::adams(std::int64_t k) const {
  LaurentPoly out;
  for (const auto& [m, c] : t_) out.add_term(c, m.pow(k));
  return out;
}

LaurentPoly LaurentPoly::substitute(VarId v, const Rational& c, const Monomial& target) const {
  LaurentPoly out;
  for (const auto& [m, coef] : t_) {
    auto [f, nm] = m.substitute(v, c, target);
    out.add_term(coef * f, nm);
  }
  return out;
}

LaurentPoly LaurentPoly::filter_var_multiples(VarId v, std::int64_t n) const {
  LaurentPoly out;
  for (const auto& [m, c] : t_)
    if (m.exp2(v) % (2 * n) == 0) out.add_term(c, m);
  return out;
}

std::map<std::int64_t, LaurentPoly> LaurentPoly::split_by_var(VarId v) const {
  std::map<std::int64_t, LaurentPoly> out;
  for (const auto& [m, c] : t_) {
    std::int64_t e = m.exp2(v);
    auto [f, rest] = m.substitute(v, Rational(1), Monomial());
    (void)f;
    out[e].add_term(c, rest);
  }
  return out;
}

bool LaurentPoly::depends_on(VarId v) const {
  for (const auto& [m, c] : t_)
    if (m.contains(v)) return true;
  return false;
}

std::int64_t LaurentPoly::max_exp2(VarId v) const {
  std::int64_t best = 0;
  for (const auto& [m, c] : t_) best = std::max(best, m.exp2(v));
  return best;
}

std::int64_t LaurentPoly::min_exp2(VarId v) const {
  std::int64_t best = 0;
  for (const auto& [m, c] : t_) best = std::min(best, m.exp2(v));
  return best;
}

std::optional<LaurentPoly> LaurentPoly::divide_one_minus(const Rational& c,
                                                         const Monomial& m) const {
  if (m.is_unit()) throw std::invalid_argument("binomial divisor needs a nonunit monomial");
  if (is_zero()) return LaurentPoly();
  const VarId pivot = m.entries().front().first;
  const std::int64_t dp = m.entries().front().second;

  // Group the support into orbits of translation by m's exponent vector;
  // within an orbit the division is univariate synthetic division.
  std::map<Monomial, std::map<std::int64_t, Rational>> orbits;
  for (const auto& [mono, coef] : t_) {
    std::int64_t j = floor_div(mono.exp2(pivot), dp);
    orbits[mono * m.pow(-j)][j] = coef;
  }

  LaurentPoly quotient;
  for (const auto& [rep, slice] : orbits) {
    const std::int64_t jmin = slice.begin()->first;
    const std::int64_t jmax = slice.rbegin()->first;
    Rational h(0);
    for (std::int64_t j = jmin; j <= jmax; ++j) {
      auto it = slice.find(j);
      Rational a = it == slice.end() ? Rational(0) : it->second;
      h = a + c * h;
      if (j < jmax) {
        if (h != 0) quotient.add_term(h, rep * m.pow(j));
      } else if (h != 0) {
        return std::nullopt;  // nonzero remainder
      }
    }
  }
  return quotient;
}

}  // namespace eqgen
