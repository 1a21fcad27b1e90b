#include "eqgen/symprod.hpp"

#include <stdexcept>

#include "eqgen/variables.hpp"

namespace eqgen {

namespace {

std::int64_t total_deg2(const Monomial& m) {
  std::int64_t d = 0;
  for (const auto& [v, e] : m.entries()) d += e;
  return d;
}

}  // namespace

FactoredRational plane_chi0() {
  FactoredRational f = FactoredRational::one();
  f.div_one_minus(Rational(1), Monomial::var(vars::t1()));
  f.div_one_minus(Rational(1), Monomial::var(vars::t2()));
  return f;
}

FactoredRational plane_chiy() {
  FactoredRational f = plane_chi0();
  f.mul_one_minus(Rational(1), Monomial::var(vars::y()) * Monomial::var(vars::t1()));
  f.mul_one_minus(Rational(1), Monomial::var(vars::y()) * Monomial::var(vars::t2()));
  return f;
}

TruncatedSeries plane_elliptic(int p_cutoff) {
  TruncatedSeries s = elliptic_weight_factor(Monomial::var(vars::t1()), p_cutoff) *
                      elliptic_weight_factor(Monomial::var(vars::t2()), p_cutoff);
  s.mul_coeff(FactoredRational::term(Rational(1), Monomial::var(vars::y(), -1)));
  return s;
}

TruncatedSeries sym_series(GenusFlavor flavor, int q_cutoff, int p_cutoff) {
  if (flavor == GenusFlavor::Chi0) {
    TruncatedSeries s({vars::Q()}, {q_cutoff});
    if (q_cutoff >= 1) s.set({1}, plane_chi0());
    return s.pe();
  }
  if (flavor == GenusFlavor::ChiY) {
    // one-particle content Q chi_y / (1 - y Q), expanded in Q
    TruncatedSeries s({vars::Q()}, {q_cutoff});
    FactoredRational chiy = plane_chiy();
    for (int j = 1; j <= q_cutoff; ++j) {
      FactoredRational c = chiy;
      c.mul_term(Rational(1), Monomial::var(vars::y(), j - 1));
      s.set({j}, c);
    }
    return s.pe();
  }
  // Two-variable case: the length-l cycles contribute the slice of the plane
  // genus with nome order divisible by l, the order divided by l; the
  // plethystic tower supplies the multi-cycle combinatorics.
  TruncatedSeries plane = plane_elliptic(q_cutoff * p_cutoff);
  TruncatedSeries s({vars::p(), vars::Q()}, {p_cutoff, q_cutoff});
  for (int l = 1; l <= q_cutoff; ++l) {
    TruncatedSeries sel = plane.grading_select_divide(vars::p(), l);
    for (const auto& [e, v] : sel.terms()) {
      if (e[0] > p_cutoff) continue;
      s.add({e[0], l}, v);
    }
  }
  return s.pe();
}

FactoredRational orbifold_chi0(int n) {
  if (n < 0) throw std::invalid_argument("order must be nonnegative");
  FactoredRational total;
  for (const auto& mu : enumerate_partitions(n)) {
    FactoredRational f(Rational(1) / Rational(mpq_class(mu.z_order())));
    for (const auto& [part, mult] : mu.multiplicities()) {
      f.div_one_minus(Rational(1), Monomial::var(vars::t1(), part), mult);
      f.div_one_minus(Rational(1), Monomial::var(vars::t2(), part), mult);
    }
    total += f;
  }
  return total;
}

LaurentPoly window_filter(const LaurentPoly& p, long window) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms())
    if (total_deg2(m) <= 2 * window) out.add_term(c, m);
  return out;
}

LaurentPoly taylor_window(const FactoredRational& f, long window) {
  LaurentPoly out = f.num();
  for (const auto& [atom, mult] : f.den()) {
    for (const auto& [v, e] : atom.mono.entries())
      if (e < 0) throw std::domain_error("expansion needs nonnegative denominator exponents");
    std::int64_t d = total_deg2(atom.mono);
    LaurentPoly geo;
    Rational cj(1);
    for (std::int64_t j = 0; j * d <= 2 * window; ++j) {
      geo.add_term(cj, atom.mono.pow(j));
      cj *= atom.coef;
    }
    for (int i = 0; i < mult; ++i) out = window_filter(out * geo, window);
  }
  return window_filter(out, window);
}

LaurentPoly symmetric_power_character(int k, int window) {
  // power sums of the truncated alphabet {t1^a t2^b : a+b <= window}
  std::vector<LaurentPoly> P(k + 1);
  for (int r = 1; r <= k; ++r)
    for (int a = 0; a <= window; ++a)
      for (int b = 0; a + b <= window; ++b)
        P[r].add_term(Rational(1), Monomial::var(vars::t1(), static_cast<long>(r) * a) *
                                       Monomial::var(vars::t2(), static_cast<long>(r) * b));
  std::vector<LaurentPoly> h(k + 1);
  h[0] = LaurentPoly::one();
  for (int d = 1; d <= k; ++d) {
    LaurentPoly acc;
    for (int r = 1; r <= d; ++r) acc += P[r] * h[d - r];
    acc.mul_scalar(Rational(1, d));
    h[d] = acc;
  }
  return window_filter(h[k], window);
}

void GenusCoefficients::set(std::vector<long> key, long value) {
  if (static_cast<int>(key.size()) != 2 + t_vars)
    throw std::invalid_argument("key is (nome order, y exponent, t exponents...)");
  if (key[0] < 0) throw std::invalid_argument("nome orders are nonnegative");
  if (value == 0)
    table.erase(key);
  else
    table[std::move(key)] = value;
}

GenusCoefficients GenusCoefficients::from_series(const TruncatedSeries& s, int t_vars,
                                                 long y_window, long t_window) {
  if (s.gvars() != std::vector<VarId>{vars::p()})
    throw std::invalid_argument("expected a series graded by the nome");
  GenusCoefficients out;
  out.t_vars = t_vars;
  std::vector<VarId> tv;
  for (int i = 0; i < t_vars; ++i) tv.push_back(i == 0 ? vars::t1() : vars::t2());
  for (const auto& [e, coef] : s.terms()) {
    for (const auto& [atom, mult] : coef.den())
      if (atom.mono.contains(vars::y()))
        throw std::domain_error("expansion supports denominators in the torus weights only");
    LaurentPoly expanded = taylor_window(coef, t_window + y_window);
    for (const auto& [m, c] : expanded.terms()) {
      std::vector<long> key{e[0], m.exp2(vars::y()) / 2};
      bool keep = std::llabs(key[1]) <= y_window;
      for (VarId v : tv) {
        long te = static_cast<long>(m.exp2(v) / 2);
        keep = keep && te >= 0 && te <= t_window;
        key.push_back(te);
      }
      if (!keep) continue;
      if (!is_integer(c)) throw std::domain_error("genus coefficients must be integers");
      out.set(std::move(key), static_cast<long>(c.get_num().get_si()));
    }
  }
  return out;
}

bool generic_pe_identity_check(const GenusCoefficients& c, int q_cutoff, int nome_cutoff) {
  std::vector<VarId> tv;
  for (int i = 0; i < c.t_vars; ++i) tv.push_back(i == 0 ? vars::t1() : vars::t2());
  auto key_monomial = [&](const std::vector<long>& key) {
    Monomial m = Monomial::var(vars::y(), key[1]);
    for (int i = 0; i < c.t_vars; ++i) m *= Monomial::var(tv[i], key[2 + i]);
    return m;
  };

  // cycle-sum exponential
  TruncatedSeries arg({vars::p(), vars::Q()}, {nome_cutoff, q_cutoff});
  for (int l = 1; l <= q_cutoff; ++l) {
    for (int m = 1; l * m <= q_cutoff; ++m) {
      for (const auto& [key, val] : c.table) {
        if (key[0] % l != 0) continue;
        long alpha = key[0] / l;
        if (m * alpha > nome_cutoff) continue;
        FactoredRational term(rat(val, m));
        term.mul_term(Rational(1), key_monomial(key).pow(m));
        arg.add({static_cast<int>(m * alpha), l * m}, term);
      }
    }
  }
  TruncatedSeries lhs = arg.exp();

  // product over covers with exponents -c(n*alpha, ...)
  TruncatedSeries rhs = TruncatedSeries::unit({vars::p(), vars::Q()}, {nome_cutoff, q_cutoff});
  for (const auto& [key, val] : c.table) {
    for (int n = 1; n <= q_cutoff; ++n) {
      if (key[0] % n != 0) continue;
      long alpha = key[0] / n;
      if (alpha > nome_cutoff) continue;
      TruncatedSeries factor =
          TruncatedSeries::unit({vars::p(), vars::Q()}, {nome_cutoff, q_cutoff});
      factor.add({static_cast<int>(alpha), n},
                 FactoredRational::term(Rational(-1), key_monomial(key)));
      rhs *= factor.pow(static_cast<int>(-val));
    }
  }
  return lhs == rhs;
}

}  // namespace eqgen
