#include "eqgen/instanton.hpp"

#include <algorithm>
#include <cassert>

#include "eqgen/variables.hpp"

namespace eqgen {

namespace {

Monomial t1_pow(long e) { return Monomial::var(vars::t1(), e); }
Monomial t2_pow(long e) { return Monomial::var(vars::t2(), e); }

// (E^{1/2} - E^{-1/2}) as a Laurent binomial on the half-integer lattice.
LaurentPoly half_difference(const Monomial& E) {
  LaurentPoly b;
  Monomial r = E.sqrt_exact();
  b.add_term(Rational(1), r);
  b.add_term(Rational(-1), r.inverse());
  return b;
}

// f *= (E^{1/2} - E^{-1/2})^c, exact for either sign of c.
void mul_half_difference_pow(FactoredRational& f, const Monomial& E, long c) {
  if (c == 0) return;
  if (E.is_unit()) throw std::domain_error("vanishing hyperbolic factor");
  if (c > 0) {
    LaurentPoly b = half_difference(E);
    for (long i = 0; i < c; ++i) f *= FactoredRational(b);
  } else {
    // 1/(E^{1/2} - E^{-1/2}) = -E^{1/2}/(1 - E)
    f.mul_term(rat_pow(Rational(-1), -c), E.sqrt_exact().pow(-c));
    f.div_one_minus(Rational(1), E, static_cast<int>(-c));
  }
}

Monomial pair_weight_base(int alpha, int gamma) {
  // e^{beta a_{alpha,gamma}} = e_alpha^{-1} e_gamma
  return Monomial::var(vars::e(alpha), -1) * Monomial::var(vars::e(gamma), 1);
}

}  // namespace

WeightList tangent_weights(const FixedPoint& fp) {
  const auto& comps = fp.mu.components();
  const int N = fp.rank();
  WeightList out;
  out.reserve(2 * static_cast<std::size_t>(N) * fp.instanton_number());
  for (int alpha = 1; alpha <= N; ++alpha) {
    for (int gamma = 1; gamma <= N; ++gamma) {
      const Partition& ma = comps[alpha - 1];
      const Partition& mg = comps[gamma - 1];
      Monomial e = Monomial::var(vars::e(gamma)) * Monomial::var(vars::e(alpha), -1);
      for (Cell c : ma.cells()) {
        long l = mg.transpose_part(c.j) - c.i;  // leg measured in mu^gamma
        long a = ma.part(c.i) - c.j;            // arm in mu^alpha
        out.push_back(e * t1_pow(-l) * t2_pow(a + 1));
      }
      for (Cell c : mg.cells()) {
        long l = ma.transpose_part(c.j) - c.i;
        long a = mg.part(c.i) - c.j;
        out.push_back(e * t1_pow(l + 1) * t2_pow(-a));
      }
    }
  }
  return out;
}

std::pair<WeightList, Monomial> v_bundle_weights(const FixedPoint& fp) {
  WeightList ws;
  Monomial det_dual;
  for (int alpha = 1; alpha <= fp.rank(); ++alpha) {
    const Partition& mu = fp.mu.components()[alpha - 1];
    for (Cell c : mu.cells()) {
      Monomial w = Monomial::var(vars::e(alpha)) * t1_pow(1 - c.i) * t2_pow(1 - c.j);
      det_dual *= w.inverse();
      ws.push_back(w);
    }
  }
  return {ws, det_dual};
}

namespace {

// Geometric factor 1/(1 - w p^shift) as a truncated series in p, shift >= 1.
TruncatedSeries p_geometric(const Monomial& w, int shift, int p_cutoff) {
  TruncatedSeries s({vars::p()}, {p_cutoff});
  for (int j = 0; shift * j <= p_cutoff; ++j)
    s.set({shift * j}, FactoredRational::term(Rational(1), w.pow(j)));
  return s;
}

// Binomial factor (1 - c w p^shift), shift >= 1.
TruncatedSeries p_binomial(const Rational& c, const Monomial& w, int shift, int p_cutoff) {
  TruncatedSeries s = TruncatedSeries::unit({vars::p()}, {p_cutoff});
  if (shift <= p_cutoff) s.set({shift}, FactoredRational::term(-c, w));
  return s;
}

}  // namespace

TruncatedSeries elliptic_weight_factor(const Monomial& w, int p_cutoff) {
  const Monomial y = Monomial::var(vars::y());
  FactoredRational base = FactoredRational::one();
  base.mul_one_minus(Rational(1), y * w);
  base.div_one_minus(Rational(1), w);
  TruncatedSeries s = TruncatedSeries::unit({vars::p()}, {p_cutoff});
  s.mul_coeff(base);
  for (int n = 2; n - 1 <= p_cutoff; ++n) {
    s *= p_binomial(Rational(1), y * w, n - 1, p_cutoff);
    s *= p_geometric(w, n - 1, p_cutoff);
  }
  for (int n = 1; n <= p_cutoff; ++n) {
    s *= p_binomial(Rational(1), y.inverse() * w.inverse(), n, p_cutoff);
    s *= p_geometric(w.inverse(), n, p_cutoff);
  }
  return s;
}

namespace {
}  // namespace

TruncatedSeries genus_series(int N, GenusFlavor flavor, int q_cutoff, int p_cutoff) {
  if (N < 1) throw std::invalid_argument("rank must be positive");
  const bool elliptic = flavor == GenusFlavor::Elliptic;
  std::vector<VarId> gv =
      elliptic ? std::vector<VarId>{vars::p(), vars::Q()} : std::vector<VarId>{vars::Q()};
  std::vector<int> cut =
      elliptic ? std::vector<int>{p_cutoff, q_cutoff} : std::vector<int>{q_cutoff};
  TruncatedSeries out(gv, cut);
  for (int k = 0; k <= q_cutoff; ++k) {
    for (const auto& mu : enumerate_multipartitions(N, k)) {
      FixedPoint fp{mu};
      WeightList ws = tangent_weights(fp);
      if (!elliptic) {
        FactoredRational f = FactoredRational::one();
        for (const Monomial& w : ws) {
          if (flavor == GenusFlavor::ChiY)
            f.mul_one_minus(Rational(1), Monomial::var(vars::y()) * w);
          f.div_one_minus(Rational(1), w);
        }
        out.add({k}, f);
      } else {
        TruncatedSeries point = TruncatedSeries::unit({vars::p()}, {p_cutoff});
        for (const Monomial& w : ws) point *= elliptic_weight_factor(w, p_cutoff);
        point.mul_coeff(
            FactoredRational::term(Rational(1), Monomial::var(vars::y(), -static_cast<long>(N) * k)));
        for (const auto& [pe, val] : point.terms()) out.add({pe[0], k}, val);
      }
    }
  }
  return out;
}

TruncatedSeries twisted_index_series(int N, int m, int q_cutoff) {
  if (N < 1) throw std::invalid_argument("rank must be positive");
  TruncatedSeries out({vars::Q()}, {q_cutoff});
  for (int k = 0; k <= q_cutoff; ++k) {
    for (const auto& mu : enumerate_multipartitions(N, k)) {
      FixedPoint fp{mu};
      FactoredRational f = FactoredRational::one();
      if (m != 0) {
        auto [vw, det_dual] = v_bundle_weights(fp);
        f.mul_term(Rational(1), det_dual.pow(m));
      }
      for (const Monomial& w : tangent_weights(fp)) mul_half_difference_pow(f, w, -1);
      out.add({k}, f);
    }
  }
  return out;
}

std::map<long, long> stable_pair_counts(const Partition& a, const Partition& b, int L) {
  auto counts_at = [&](int bound) {
    std::map<long, long> cnt;
    for (int i = 1; i <= bound; ++i) {
      long Ai = a.part(i) - i;
      for (int j = 1; j <= bound; ++j) {
        ++cnt[Ai - (b.part(j) - j)];
        --cnt[static_cast<long>(j) - i];
      }
    }
    return cnt;
  };
  const long window = std::max(a.part(1) + b.length(), b.part(1) + a.length()) + 1;
  auto take_window = [&](const std::map<long, long>& cnt) {
    std::map<long, long> out;
    for (auto [v, c] : cnt)
      if (c != 0 && std::abs(v) <= window) out[v] = c;
    return out;
  };
  std::map<long, long> w0 = take_window(counts_at(L));
  std::map<long, long> w1 = take_window(counts_at(L + 1));
  if (w0 != w1) throw StabilizationError("ratio product not stabilized at this bound");
  long total = 0;
  for (auto [v, c] : w0) total += c;
  if (total != -(a.size() + b.size()))
    throw StabilizationError("stabilization window lost factors");
  return w0;
}

int stabilization_bound(const MultiPartition& mu) {
  int maxlen = 0, maxpart = 0;
  for (const auto& c : mu.components()) {
    maxlen = std::max(maxlen, c.length());
    maxpart = std::max(maxpart, c.length() == 0 ? 0 : c.part(1));
  }
  return std::max(maxlen + mu.total_size() + 2, 2 * (maxlen + maxpart) + 2);
}

void mul_stable_pair_product(FactoredRational& f, const MultiPartition& mu, int alpha, int gamma,
                             int L) {
  const Partition& a = mu.components()[alpha - 1];
  const Partition& b = mu.components()[gamma - 1];
  Monomial base = alpha == gamma ? Monomial() : pair_weight_base(alpha, gamma);
  for (auto [v, c] : stable_pair_counts(a, b, L)) {
    Monomial E = base * Monomial::var(vars::q(), -v);
    if (E.is_unit()) throw StabilizationError("unexpected vanishing factor on the diagonal");
    mul_half_difference_pow(f, E, c);
    f.mul_scalar(rat_pow(Rational(1, 2), c));
  }
}

TruncatedSeries sinh_form_series(int N, int m, int q_cutoff) {
  if (N < 1) throw std::invalid_argument("rank must be positive");
  TruncatedSeries out({vars::Q()}, {q_cutoff});
  const Rational per_instanton = rat_pow(Rational(1, 2), 2 * N);
  for (int k = 0; k <= q_cutoff; ++k) {
    for (const auto& mu : enumerate_multipartitions(N, k)) {
      const int L = stabilization_bound(mu);
      FactoredRational f(rat_pow(per_instanton, k));
      // twist weight: prod_alpha e_alpha^{-m |mu^alpha|} q^{-m kappa_alpha/2}
      Monomial twist;
      for (int alpha = 1; alpha <= N; ++alpha) {
        const Partition& c = mu.components()[alpha - 1];
        twist *= Monomial::var(vars::e(alpha), -static_cast<long>(m) * c.size());
        twist *= Monomial::var_pow2(vars::q(), -static_cast<long>(m) * c.kappa());
      }
      f.mul_term(Rational(1), twist);
      for (int alpha = 1; alpha <= N; ++alpha)
        for (int gamma = 1; gamma <= N; ++gamma) mul_stable_pair_product(f, mu, alpha, gamma, L);
      out.add({k}, f);
    }
  }
  return out;
}

FactoredRational konishi_hook_side(const MultiPartition& mu) {
  const int N = mu.rank();
  FactoredRational f = FactoredRational::one();
  for (int alpha = 1; alpha <= N; ++alpha) {
    for (int gamma = 1; gamma <= N; ++gamma) {
      const Partition& ma = mu.components()[alpha - 1];
      const Partition& mg = mu.components()[gamma - 1];
      Monomial base = alpha == gamma ? Monomial() : pair_weight_base(alpha, gamma);
      for (Cell c : ma.cells()) {
        long x = ma.part(c.i) + mg.transpose_part(c.j) - c.i - c.j + 1;
        mul_half_difference_pow(f, base * Monomial::var(vars::q(), -x), -1);
        f.mul_scalar(Rational(2));
      }
      for (Cell c : mg.cells()) {
        long x = mg.part(c.i) + ma.transpose_part(c.j) - c.i - c.j + 1;
        mul_half_difference_pow(f, base * Monomial::var(vars::q(), x), -1);
        f.mul_scalar(Rational(2));
      }
    }
  }
  return f;
}

FactoredRational konishi_product_side(const MultiPartition& mu) {
  const int N = mu.rank();
  const int L = stabilization_bound(mu);
  FactoredRational f = FactoredRational::one();
  for (int alpha = 1; alpha <= N; ++alpha)
    for (int gamma = 1; gamma <= N; ++gamma) mul_stable_pair_product(f, mu, alpha, gamma, L);
  return f;
}

}  // namespace eqgen
