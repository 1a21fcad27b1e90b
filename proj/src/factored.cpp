#include "eqgen/factored.hpp"

#include <algorithm>

namespace eqgen {

namespace {

LaurentPoly expand_factor(const DenomFactor& f, int k) {
  LaurentPoly b = LaurentPoly::one();
  b.add_term(-f.coef, f.mono);
  LaurentPoly out = LaurentPoly::one();
  for (int i = 0; i < k; ++i) out *= b;
  return out;
}

LaurentPoly expand_factors(const std::map<DenomFactor, int>& fs) {
  LaurentPoly out = LaurentPoly::one();
  for (const auto& [f, k] : fs) out *= expand_factor(f, k);
  return out;
}

}  // namespace

FactoredRational& FactoredRational::mul_scalar(const Rational& c) {
  num_.mul_scalar(c);
  if (num_.is_zero()) den_.clear();
  return *this;
}

FactoredRational& FactoredRational::mul_term(const Rational& c, const Monomial& m) {
  num_.mul_term(c, m);
  if (num_.is_zero()) den_.clear();
  return *this;
}

FactoredRational& FactoredRational::mul_one_minus(const Rational& c, const Monomial& m, int k) {
  if (k == 0 || is_zero()) return *this;
  if (c == 0) return *this;
  if (m.is_unit()) return mul_scalar(rat_pow(1 - c, k));
  if (!m.positive_leading()) {
    // (1 - c m) = -c m (1 - c^{-1} m^{-1})
    mul_term(rat_pow(-c, k), m.pow(k));
    return mul_one_minus(1 / c, m.inverse(), k);
  }
  DenomFactor f{m, c};
  auto it = den_.find(f);
  while (k > 0 && it != den_.end()) {
    if (--it->second == 0) {
      den_.erase(it);
      it = den_.end();
    }
    --k;
  }
  if (k > 0) num_ *= expand_factor(f, k);
  return *this;
}

FactoredRational& FactoredRational::div_one_minus(const Rational& c, const Monomial& m, int k) {
  if (k == 0 || is_zero()) return *this;
  if (c == 0) return *this;
  if (m.is_unit()) {
    if (c == 1) throw SingularSpecialization("division by (1 - 1)");
    return mul_scalar(rat_pow(1 - c, -k));
  }
  if (!m.positive_leading()) {
    // 1/(1 - c m) = (-c^{-1} m^{-1}) / (1 - c^{-1} m^{-1})
    mul_term(rat_pow(-1 / c, k), m.pow(-k));
    return div_one_minus(1 / c, m.inverse(), k);
  }
  den_[DenomFactor{m, c}] += k;
  return *this;
}

FactoredRational FactoredRational::operator+(const FactoredRational& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  FactoredRational out;
  // Common denominator = atomwise max of multiplicities.
  std::map<DenomFactor, int> lift_a, lift_b;
  auto a = den_.begin();
  auto b = o.den_.begin();
  while (a != den_.end() || b != o.den_.end()) {
    if (b == o.den_.end() || (a != den_.end() && a->first < b->first)) {
      out.den_[a->first] = a->second;
      lift_b[a->first] = a->second;
      ++a;
    } else if (a == den_.end() || b->first < a->first) {
      out.den_[b->first] = b->second;
      lift_a[b->first] = b->second;
      ++b;
    } else {
      int mx = std::max(a->second, b->second);
      out.den_[a->first] = mx;
      if (mx > a->second) lift_a[a->first] = mx - a->second;
      if (mx > b->second) lift_b[b->first] = mx - b->second;
      ++a;
      ++b;
    }
  }
  out.num_ = num_ * expand_factors(lift_a) + o.num_ * expand_factors(lift_b);
  if (out.num_.is_zero()) out.den_.clear();
  return out;
}

FactoredRational FactoredRational::operator-() const {
  FactoredRational out = *this;
  out.num_ = -out.num_;
  return out;
}

FactoredRational FactoredRational::operator-(const FactoredRational& o) const {
  return *this + (-o);
}

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
  if (is_zero() || o.is_zero()) return FactoredRational();
  FactoredRational out;
  out.num_ = num_ * o.num_;
  out.den_ = den_;
  for (const auto& [f, k] : o.den_) out.den_[f] += k;
  return out;
}

FactoredRational FactoredRational::operator/(const FactoredRational& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (is_zero()) return FactoredRational();
  FactoredRational out = *this;
  for (const auto& [f, k] : o.den_) out.mul_one_minus(f.coef, f.mono, k);
  const auto& terms = o.num_.terms();
  if (terms.size() == 1) {
    const auto& [m, c] = *terms.begin();
    out.mul_term(1 / c, m.inverse());
    return out;
  }
  if (terms.size() == 2) {
    // c1 M1 + c2 M2 = c1 M1 (1 - (-c2/c1) M2/M1)
    auto it = terms.begin();
    const auto& [m1, c1] = *it;
    const auto& [m2, c2] = *std::next(it);
    out.mul_term(1 / c1, m1.inverse());
    out.div_one_minus(-c2 / c1, m2 * m1.inverse());
    return out;
  }
  throw std::domain_error("division by a rational function with a non-binomial numerator");
}

FactoredRational FactoredRational::pow(int k) const {
  if (k == 0) return one();
  FactoredRational base = k > 0 ? *this : one() / *this;
  int n = k > 0 ? k : -k;
  FactoredRational out = one();
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

bool FactoredRational::equals(const FactoredRational& o) const {
  if (is_zero()) return o.is_zero();
  if (o.is_zero()) return false;
  // Cancel the shared atoms, then cross-multiply.
  std::map<DenomFactor, int> only_a, only_b;
  auto a = den_.begin();
  auto b = o.den_.begin();
  while (a != den_.end() || b != o.den_.end()) {
    if (b == o.den_.end() || (a != den_.end() && a->first < b->first)) {
      only_a[a->first] = a->second;
      ++a;
    } else if (a == den_.end() || b->first < a->first) {
      only_b[b->first] = b->second;
      ++b;
    } else {
      if (a->second > b->second) only_a[a->first] = a->second - b->second;
      if (b->second > a->second) only_b[b->first] = b->second - a->second;
      ++a;
      ++b;
    }
  }
  return num_ * expand_factors(only_b) == o.num_ * expand_factors(only_a);
}

FactoredRational FactoredRational::adams(std::int64_t k) const {
  FactoredRational out;
  out.num_ = num_.adams(k);
  for (const auto& [f, mult] : den_) out.den_[DenomFactor{f.mono.pow(k), f.coef}] += mult;
  return out;
}

FactoredRational FactoredRational::substitute(VarId v, const Rational& c,
                                              const Monomial& target) const {
  FactoredRational out(num_.substitute(v, c, target));
  if (out.is_zero()) return out;
  for (const auto& [f, mult] : den_) {
    if (!f.mono.contains(v)) {
      out.den_[f] += mult;
      continue;
    }
    auto [scale, nm] = f.mono.substitute(v, c, target);
    Rational nc = f.coef * scale;
    if (nm.is_unit() && nc == 1)
      throw SingularSpecialization("specialization sends a denominator factor to zero");
    out.div_one_minus(nc, nm, mult);
  }
  return out;
}

std::optional<LaurentPoly> FactoredRational::to_laurent() const {
  LaurentPoly cur = num_;
  for (const auto& [f, mult] : den_) {
    for (int i = 0; i < mult; ++i) {
      auto q = cur.divide_one_minus(f.coef, f.mono);
      if (!q) return std::nullopt;
      cur = std::move(*q);
    }
  }
  return cur;
}

FactoredRational FactoredRational::cancelled() const {
  FactoredRational out = *this;
  if (out.is_zero()) return out;
  for (auto it = out.den_.begin(); it != out.den_.end();) {
    bool erased = false;
    while (it->second > 0) {
      auto q = out.num_.divide_one_minus(it->first.coef, it->first.mono);
      if (!q) break;
      out.num_ = std::move(*q);
      if (--it->second == 0) {
        it = out.den_.erase(it);
        erased = true;
        break;
      }
    }
    if (!erased) ++it;
  }
  return out;
}

std::map<std::int64_t, FactoredRational> FactoredRational::split_by_var(VarId v) const {
  for (const auto& [f, mult] : den_)
    if (f.mono.contains(v))
      throw std::domain_error("cannot slice: denominator depends on the variable");
  std::map<std::int64_t, FactoredRational> out;
  for (auto& [e, poly] : num_.split_by_var(v)) {
    FactoredRational piece(std::move(poly));
    piece.den_ = den_;
    out.emplace(e, std::move(piece));
  }
  return out;
}

std::map<std::int64_t, FactoredRational> FactoredRational::expand_in_var(VarId v, std::int64_t lo2,
                                                                         std::int64_t hi2) const {
  std::map<std::int64_t, FactoredRational> slices;
  for (auto& [e2, piece] : num_.split_by_var(v)) slices.emplace(e2, FactoredRational(piece));
  for (const auto& [atom, mult] : den_) {
    std::int64_t step = atom.mono.exp2(v);
    for (int rep = 0; rep < mult; ++rep) {
      if (step == 0) {
        for (auto& [e2, piece] : slices) piece.div_one_minus(atom.coef, atom.mono);
        continue;
      }
      // orient to positive powers of v, then expand geometrically
      Rational c = atom.coef;
      Monomial m = atom.mono;
      if (step < 0) {
        // 1/(1 - c m) = (-c^{-1} m^{-1}) / (1 - c^{-1} m^{-1})
        c = 1 / c;
        m = m.inverse();
        std::map<std::int64_t, FactoredRational> shifted;
        for (auto& [e2, piece] : slices) {
          FactoredRational p = std::move(piece);
          p.mul_term(-c, m);
          shifted.emplace(e2 + m.exp2(v), std::move(p));
        }
        slices = std::move(shifted);
      }
      std::int64_t vstep = m.exp2(v);
      auto [f, base] = m.substitute(v, Rational(1), Monomial());
      (void)f;
      std::map<std::int64_t, FactoredRational> next;
      for (auto& [e2, piece] : slices) {
        Rational cj(1);
        for (std::int64_t j = 0; e2 + j * vstep <= hi2; ++j) {
          FactoredRational t = piece;
          t.mul_term(cj, base.pow(j));
          auto it = next.find(e2 + j * vstep);
          if (it == next.end())
            next.emplace(e2 + j * vstep, std::move(t));
          else
            it->second += t;
          cj *= c;
        }
      }
      slices = std::move(next);
    }
  }
  std::map<std::int64_t, FactoredRational> out;
  for (auto& [e2, piece] : slices)
    if (e2 >= lo2 && e2 <= hi2 && !piece.is_zero()) out.emplace(e2, std::move(piece));
  return out;
}

bool FactoredRational::depends_on(VarId v) const {
  if (num_.depends_on(v)) return true;
  for (const auto& [f, mult] : den_)
    if (f.mono.contains(v)) return true;
  return false;
}

}  // namespace eqgen
