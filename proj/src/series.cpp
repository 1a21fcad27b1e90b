#include "eqgen/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eqgen {

TruncatedSeries::TruncatedSeries(std::vector<VarId> gvars, std::vector<int> cutoffs)
    : gvars_(std::move(gvars)), cutoffs_(std::move(cutoffs)) {
  if (gvars_.size() != cutoffs_.size())
    throw std::invalid_argument("one cutoff per grading variable");
  if (!std::is_sorted(gvars_.begin(), gvars_.end()))
    throw std::invalid_argument("grading variables must be sorted by id");
  for (int c : cutoffs_)
    if (c < 0) throw std::invalid_argument("cutoffs must be nonnegative");
}

TruncatedSeries TruncatedSeries::unit(std::vector<VarId> gvars, std::vector<int> cutoffs) {
  TruncatedSeries s(std::move(gvars), std::move(cutoffs));
  s.set(Expo(s.gvars_.size(), 0), FactoredRational::one());
  return s;
}

bool TruncatedSeries::within(const Expo& e) const {
  if (e.size() != gvars_.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > cutoffs_[i]) return false;
  return true;
}

void TruncatedSeries::set(const Expo& e, FactoredRational v) {
  if (!within(e)) throw std::out_of_range("grading exponent outside cutoffs");
  if (v.is_zero())
    c_.erase(e);
  else
    c_[e] = std::move(v);
}

void TruncatedSeries::add(const Expo& e, const FactoredRational& v) {
  if (!within(e)) throw std::out_of_range("grading exponent outside cutoffs");
  if (v.is_zero()) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

FactoredRational TruncatedSeries::coefficient(const Expo& e) const {
  if (!within(e)) throw std::out_of_range("coefficient query outside cutoffs");
  auto it = c_.find(e);
  return it == c_.end() ? FactoredRational() : it->second;
}

FactoredRational TruncatedSeries::coefficient_of(VarId v, int exp) const {
  Expo e(gvars_.size(), 0);
  e[gvar_index(v)] = exp;
  return coefficient(e);
}

std::size_t TruncatedSeries::gvar_index(VarId v) const {
  for (std::size_t i = 0; i < gvars_.size(); ++i)
    if (gvars_[i] == v) return i;
  throw std::invalid_argument("not a grading variable of this series");
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (gvars_ != o.gvars_ || cutoffs_ != o.cutoffs_)
    throw std::invalid_argument("series have different grading declarations");
}

int TruncatedSeries::total_cutoff() const {
  return std::accumulate(cutoffs_.begin(), cutoffs_.end(), 0);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries out = *this;
  for (const auto& [e, v] : o.c_) out.add(e, v);
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries out = *this;
  for (const auto& [e, v] : o.c_) out.add(e, -v);
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries out(gvars_, cutoffs_);
  for (const auto& [ea, va] : c_) {
    for (const auto& [eb, vb] : o.c_) {
      Expo e(ea.size());
      bool ok = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > cutoffs_[i]) {
          ok = false;
          break;
        }
      }
      if (ok) out.add(e, va * vb);
    }
  }
  return out;
}

TruncatedSeries& TruncatedSeries::mul_coeff(const FactoredRational& f) {
  if (f.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [e, v] : c_) v *= f;
  return *this;
}

TruncatedSeries& TruncatedSeries::mul_scalar(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [e, v] : c_) v.mul_scalar(c);
  return *this;
}

TruncatedSeries TruncatedSeries::exp() const {
  Expo zero(gvars_.size(), 0);
  if (c_.count(zero)) throw std::invalid_argument("exp needs vanishing constant term");
  // The argument is nilpotent modulo the cutoff ideal, so a Horner sum of
  // depth sum(cutoffs) is exact.
  int depth = total_cutoff();
  TruncatedSeries out = unit(gvars_, cutoffs_);
  for (int n = depth; n >= 1; --n) {
    out = *this * out;
    out.mul_scalar(Rational(1, n));
    out.add(zero, FactoredRational::one());
  }
  return out;
}

TruncatedSeries TruncatedSeries::log() const {
  Expo zero(gvars_.size(), 0);
  if (!coefficient(zero).is_one())
    throw std::invalid_argument("log needs constant term 1");
  TruncatedSeries u = *this;
  u.add(zero, -FactoredRational::one());
  TruncatedSeries acc(gvars_, cutoffs_);
  TruncatedSeries power = u;
  int depth = total_cutoff();
  for (int n = 1; n <= depth && !power.c_.empty(); ++n) {
    TruncatedSeries t = power;
    t.mul_scalar(Rational((n % 2 == 1) ? 1 : -1, n));
    acc += t;
    if (n < depth) power *= u;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::inverse() const {
  Expo zero(gvars_.size(), 0);
  FactoredRational c0 = coefficient(zero);
  if (c0.is_zero()) throw std::invalid_argument("inverse needs an invertible constant term");
  TruncatedSeries r = *this;
  r.mul_coeff(FactoredRational::one() / c0);
  r.add(zero, -FactoredRational::one());  // r = s/c0 - 1, nilpotent
  TruncatedSeries out = unit(gvars_, cutoffs_);
  TruncatedSeries power = r;
  int depth = total_cutoff();
  for (int n = 1; n <= depth && !power.c_.empty(); ++n) {
    TruncatedSeries t = power;
    t.mul_scalar(Rational(n % 2 == 1 ? -1 : 1));
    out += t;
    if (n < depth) power *= r;
  }
  out.mul_coeff(FactoredRational::one() / c0);
  return out;
}

TruncatedSeries TruncatedSeries::pow(int k) const {
  TruncatedSeries base = k >= 0 ? *this : inverse();
  int n = k >= 0 ? k : -k;
  TruncatedSeries out = unit(gvars_, cutoffs_);
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

TruncatedSeries TruncatedSeries::adams(std::int64_t k) const {
  if (k <= 0) throw std::invalid_argument("Adams index must be positive");
  TruncatedSeries out(gvars_, cutoffs_);
  for (const auto& [e, v] : c_) {
    Expo ne(e.size());
    bool ok = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      ne[i] = static_cast<int>(e[i] * k);
      if (ne[i] > cutoffs_[i]) {
        ok = false;
        break;
      }
    }
    if (ok) out.add(ne, v.adams(k));
  }
  return out;
}

TruncatedSeries TruncatedSeries::pe() const {
  Expo zero(gvars_.size(), 0);
  if (c_.count(zero)) throw std::invalid_argument("plethystic exp needs vanishing constant term");
  int mmax = cutoffs_.empty() ? 0 : *std::max_element(cutoffs_.begin(), cutoffs_.end());
  TruncatedSeries acc(gvars_, cutoffs_);
  for (int m = 1; m <= mmax; ++m) {
    TruncatedSeries t = adams(m);
    t.mul_scalar(Rational(1, m));
    acc += t;
  }
  if (mmax == 0) return unit(gvars_, cutoffs_);
  return acc.exp();
}

TruncatedSeries TruncatedSeries::roots_filter(VarId v, std::int64_t n) const {
  if (n <= 0) throw std::invalid_argument("averaging order must be positive");
  TruncatedSeries out(gvars_, cutoffs_);
  auto grading = std::find(gvars_.begin(), gvars_.end(), v);
  if (grading != gvars_.end()) {
    std::size_t idx = static_cast<std::size_t>(grading - gvars_.begin());
    for (const auto& [e, val] : c_)
      if (e[idx] % n == 0) out.add(e, val);
    return out;
  }
  for (const auto& [e, val] : c_) {
    for (const auto& [f, mult] : val.den())
      if (f.mono.contains(v))
        throw std::domain_error("root-of-unity filtering needs a denominator free of the variable");
    FactoredRational kept(val.num().filter_var_multiples(v, n));
    for (const auto& [f, mult] : val.den()) kept.div_one_minus(f.coef, f.mono, mult);
    out.add(e, kept);
  }
  return out;
}

TruncatedSeries TruncatedSeries::grading_select_divide(VarId gv, int l) const {
  if (l <= 0) throw std::invalid_argument("selection order must be positive");
  std::size_t idx = gvar_index(gv);
  TruncatedSeries out(gvars_, cutoffs_);
  for (const auto& [e, val] : c_) {
    if (e[idx] % l != 0) continue;
    Expo ne = e;
    ne[idx] /= l;
    out.add(ne, val);
  }
  return out;
}

TruncatedSeries TruncatedSeries::substitute(VarId v, const Rational& c,
                                            const Monomial& target) const {
  if (std::find(gvars_.begin(), gvars_.end(), v) != gvars_.end())
    throw std::invalid_argument("cannot substitute a grading variable");
  for (VarId g : gvars_)
    if (target.contains(g))
      throw std::invalid_argument("substitution target may not involve grading variables");
  TruncatedSeries out(gvars_, cutoffs_);
  for (const auto& [e, val] : c_) out.add(e, val.substitute(v, c, target));
  return out;
}

TruncatedSeries TruncatedSeries::scale_grading(VarId gv, const Rational& c,
                                               const Monomial& m) const {
  std::size_t idx = gvar_index(gv);
  TruncatedSeries out(gvars_, cutoffs_);
  for (const auto& [e, val] : c_) {
    FactoredRational v = val;
    v.mul_term(rat_pow(c, e[idx]), m.pow(e[idx]));
    out.add(e, v);
  }
  return out;
}

TruncatedSeries TruncatedSeries::restrict_grading(VarId gv, int value) const {
  std::size_t idx = gvar_index(gv);
  std::vector<VarId> ng;
  std::vector<int> nc;
  for (std::size_t i = 0; i < gvars_.size(); ++i) {
    if (i == idx) continue;
    ng.push_back(gvars_[i]);
    nc.push_back(cutoffs_[i]);
  }
  TruncatedSeries out(ng, nc);
  for (const auto& [e, val] : c_) {
    if (e[idx] != value) continue;
    Expo ne;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != idx) ne.push_back(e[i]);
    out.add(ne, val);
  }
  return out;
}

TruncatedSeries TruncatedSeries::with_gvar(VarId gv, int cutoff) const {
  std::vector<VarId> ng = gvars_;
  auto pos = std::lower_bound(ng.begin(), ng.end(), gv);
  if (pos != ng.end() && *pos == gv) throw std::invalid_argument("grading variable already present");
  std::size_t idx = static_cast<std::size_t>(pos - ng.begin());
  ng.insert(pos, gv);
  std::vector<int> nc = cutoffs_;
  nc.insert(nc.begin() + idx, cutoff);
  TruncatedSeries out(ng, nc);
  for (const auto& [e, val] : c_) {
    Expo ne = e;
    ne.insert(ne.begin() + idx, 0);
    out.add(ne, val);
  }
  return out;
}

TruncatedSeries TruncatedSeries::rename_gvar(VarId from, VarId to) const {
  std::size_t idx = gvar_index(from);
  std::vector<std::pair<VarId, int>> decl;
  for (std::size_t i = 0; i < gvars_.size(); ++i)
    decl.push_back({i == idx ? to : gvars_[i], cutoffs_[i]});
  std::vector<std::pair<VarId, int>> sorted_decl = decl;
  std::sort(sorted_decl.begin(), sorted_decl.end());
  std::vector<VarId> ng;
  std::vector<int> nc;
  for (auto& [v, c] : sorted_decl) {
    ng.push_back(v);
    nc.push_back(c);
  }
  TruncatedSeries out(ng, nc);
  for (const auto& [e, val] : c_) {
    Expo ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[out.gvar_index(decl[i].first)] = e[i];
    out.add(ne, val);
  }
  return out;
}

TruncatedSeries TruncatedSeries::retruncate(const std::vector<int>& cutoffs) const {
  TruncatedSeries out(gvars_, cutoffs);
  for (const auto& [e, val] : c_)
    if (out.within(e)) out.add(e, val);
  return out;
}

bool TruncatedSeries::equals(const TruncatedSeries& o) const {
  if (gvars_ != o.gvars_ || cutoffs_ != o.cutoffs_) return false;
  // Coefficientwise exact comparison; zero entries may be absent on either side.
  for (const auto& [e, v] : c_) {
    auto it = o.c_.find(e);
    if (it == o.c_.end()) {
      if (!v.is_zero()) return false;
    } else if (!v.equals(it->second)) {
      return false;
    }
  }
  for (const auto& [e, v] : o.c_)
    if (!c_.count(e) && !v.is_zero()) return false;
  return true;
}

}  // namespace eqgen
