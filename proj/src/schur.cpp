#include "eqgen/schur.hpp"

#include <stdexcept>

#include "eqgen/variables.hpp"

namespace eqgen {

namespace {

Monomial qv(long e) { return Monomial::var(vars::q(), e); }

FactoredRational one_over_one_minus(const Monomial& m, int mult = 1) {
  FactoredRational f = FactoredRational::one();
  f.div_one_minus(Rational(1), m, mult);
  return f;
}

}  // namespace

SymFuncContext make_context(std::vector<FactoredRational> power_sums) {
  SymFuncContext ctx;
  ctx.p = std::move(power_sums);
  int bound = static_cast<int>(ctx.p.size()) - 1;
  ctx.h.assign(bound + 1, FactoredRational());
  ctx.e.assign(bound + 1, FactoredRational());
  ctx.h[0] = FactoredRational::one();
  ctx.e[0] = FactoredRational::one();
  for (int k = 1; k <= bound; ++k) {
    FactoredRational hacc, eacc;
    for (int n = 1; n <= k; ++n) {
      hacc += ctx.p[n] * ctx.h[k - n];
      FactoredRational t = ctx.p[n] * ctx.e[k - n];
      if (n % 2 == 0) t = -t;
      eacc += t;
    }
    hacc.mul_scalar(Rational(1, k));
    eacc.mul_scalar(Rational(1, k));
    ctx.h[k] = hacc;
    ctx.e[k] = eacc;
  }
  return ctx;
}

SymFuncContext principal_context(VarId x, int dir, int bound) {
  std::vector<FactoredRational> p(bound + 1);
  for (int n = 1; n <= bound; ++n)
    p[n] = one_over_one_minus(Monomial::var(x, static_cast<long>(dir) * n));
  return make_context(std::move(p));
}

namespace {

// Laplace expansion over the rows of the h-matrix.
FactoredRational jt_minor(const SymFuncContext& ctx, const Partition& mu, int row,
                          unsigned col_mask) {
  const int l = mu.length();
  if (row > l) return FactoredRational::one();
  FactoredRational acc;
  int sign = 1;
  for (int col = 1; col <= l; ++col) {
    if (col_mask & (1u << col)) continue;
    long idx = mu.part(row) - row + col;
    if (idx >= 0) {
      if (idx > ctx.bound()) throw std::out_of_range("power-sum bound exceeded");
      if (!ctx.h[idx].is_zero()) {
        FactoredRational sub = jt_minor(ctx, mu, row + 1, col_mask | (1u << col));
        sub *= ctx.h[idx];
        if (sign < 0) sub = -sub;
        acc += sub;
      }
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

FactoredRational schur_at(const SymFuncContext& ctx, const Partition& mu) {
  if (mu.size() > ctx.bound()) throw std::out_of_range("power-sum bound exceeded");
  return jt_minor(ctx, mu, 1, 0);
}

FactoredRational schur_w(const Partition& mu, VarId x, int dir, int bound) {
  return schur_at(principal_context(x, dir, bound), mu);
}

FactoredRational w_hook_form(const Partition& mu, VarId x) {
  // (-1)^{|mu|} x^{-kappa/4 - |mu|/2} prod_cells 1/(x^{h/2} - x^{-h/2})
  FactoredRational f(Rational(mu.size() % 2 == 0 ? 1 : -1));
  f.mul_term(Rational(1), Monomial::var_pow2(x, -(mu.kappa() / 2) - mu.size()));
  for (Cell c : mu.cells()) {
    long h = mu.hook(c);
    // 1/(x^{h/2} - x^{-h/2}) = -x^{h/2}/(1 - x^h)
    f.mul_term(Rational(-1), Monomial::var_pow2(x, h));
    f.div_one_minus(Rational(1), Monomial::var(x, h));
  }
  return f;
}

TruncatedSeries conifold_series_schur(int q_cutoff) {
  TruncatedSeries out({vars::Q()}, {q_cutoff});
  SymFuncContext plus = principal_context(vars::q(), 1, q_cutoff);
  SymFuncContext minus = principal_context(vars::q(), -1, q_cutoff);
  for (int d = 0; d <= q_cutoff; ++d)
    for (const auto& mu : enumerate_partitions(d))
      out.add({d}, schur_at(plus, mu) * schur_at(minus, mu));
  return out;
}

TruncatedSeries conifold_series_hook(int q_cutoff) {
  TruncatedSeries out({vars::Q()}, {q_cutoff});
  for (int d = 0; d <= q_cutoff; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      FactoredRational f = FactoredRational::one();
      for (Cell c : mu.cells()) {
        long h = mu.hook(c);
        f.div_one_minus(Rational(1), qv(h));
        f.div_one_minus(Rational(1), qv(-h));
      }
      out.add({d}, f);
    }
  }
  return out;
}

TruncatedSeries conifold_series_pe(int q_cutoff) {
  TruncatedSeries arg({vars::Q()}, {q_cutoff});
  for (int n = 1; n <= q_cutoff; ++n) {
    FactoredRational f(Rational(1, n));
    f.div_one_minus(Rational(1), qv(n));
    f.div_one_minus(Rational(1), qv(-n));
    arg.add({n}, f);
  }
  return arg.exp();
}

bool cauchy_same_partition_check(int cutoff) {
  SymFuncContext x = principal_context(vars::t1(), 1, cutoff);
  SymFuncContext y = principal_context(vars::t2(), 1, cutoff);
  TruncatedSeries lhs({vars::Q()}, {cutoff});
  for (int d = 0; d <= cutoff; ++d)
    for (const auto& mu : enumerate_partitions(d)) lhs.add({d}, schur_at(x, mu) * schur_at(y, mu));
  TruncatedSeries arg({vars::Q()}, {cutoff});
  for (int n = 1; n <= cutoff; ++n) {
    FactoredRational f = x.p[n] * y.p[n];
    f.mul_scalar(Rational(1, n));
    arg.add({n}, f);
  }
  return lhs == arg.exp();
}

bool cauchy_dual_partition_check(int cutoff) {
  SymFuncContext x = principal_context(vars::t1(), 1, cutoff);
  SymFuncContext y = principal_context(vars::t2(), 1, cutoff);
  TruncatedSeries lhs({vars::Q()}, {cutoff});
  for (int d = 0; d <= cutoff; ++d)
    for (const auto& mu : enumerate_partitions(d))
      lhs.add({d}, schur_at(x, mu) * schur_at(y, mu.transpose()));
  TruncatedSeries arg({vars::Q()}, {cutoff});
  for (int n = 1; n <= cutoff; ++n) {
    FactoredRational f = x.p[n] * y.p[n];
    f.mul_scalar(Rational(n % 2 == 1 ? 1 : -1, n));
    arg.add({n}, f);
  }
  return lhs == arg.exp();
}

TruncatedSeries zhat_5d(int q_cutoff) {
  TruncatedSeries out({vars::Q()}, {q_cutoff});
  const Monomial qm = Monomial::var(vars::Qm());
  for (int d = 0; d <= q_cutoff; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      FactoredRational f = FactoredRational::one();
      for (Cell c : mu.cells()) {
        long h = mu.hook(c);
        f.mul_one_minus(Rational(1), qm * qv(h));
        f.mul_one_minus(Rational(1), qm * qv(-h));
        f.div_one_minus(Rational(1), qv(h));
        f.div_one_minus(Rational(1), qv(-h));
      }
      out.add({d}, f);
    }
  }
  return out;
}

TruncatedSeries zhat_6d(int q_cutoff, int rho_cutoff) {
  TruncatedSeries out({vars::Qrho(), vars::Q()}, {rho_cutoff, q_cutoff});
  const Monomial qm = Monomial::var(vars::Qm());
  for (int d = 0; d <= q_cutoff; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      TruncatedSeries point = TruncatedSeries::unit({vars::Qrho()}, {rho_cutoff});
      FactoredRational base = FactoredRational::one();
      for (Cell c : mu.cells()) {
        long h = mu.hook(c);
        base.mul_one_minus(Rational(1), qm * qv(h));
        base.mul_one_minus(Rational(1), qm * qv(-h));
        base.div_one_minus(Rational(1), qv(h));
        base.div_one_minus(Rational(1), qv(-h));
        for (int k = 1; k <= rho_cutoff; ++k) {
          for (const Monomial& num :
               {qm * qv(h), qm * qv(-h), qm.inverse() * qv(h), qm.inverse() * qv(-h)}) {
            TruncatedSeries b = TruncatedSeries::unit({vars::Qrho()}, {rho_cutoff});
            b.add({k}, FactoredRational::term(Rational(-1), num));
            point *= b;
          }
          for (const Monomial& den : {qv(h), qv(-h)}) {
            TruncatedSeries g({vars::Qrho()}, {rho_cutoff});
            for (int j = 0; k * j <= rho_cutoff; ++j)
              g.set({k * j}, FactoredRational::term(Rational(1), den.pow(j)));
            point *= g * g;
          }
        }
      }
      point.mul_coeff(base);
      for (const auto& [e, v] : point.terms()) out.add({e[0], d}, v);
    }
  }
  return out;
}

namespace {

TruncatedSeries zhat_rank_n2(int m, int q_cutoff) {
  TruncatedSeries out({vars::Q()}, {q_cutoff});
  const Rational unit_scale = rat(m % 2 == 0 ? 1 : -1, 16);
  const Monomial qf = Monomial::var(vars::e(1)) * Monomial::var(vars::e(2), -1);
  for (int k = 0; k <= q_cutoff; ++k) {
    for (const auto& mu : enumerate_multipartitions(2, k)) {
      const int L = stabilization_bound(mu);
      FactoredRational f(rat_pow(unit_scale, k));
      long kap = mu.components()[0].kappa() + mu.components()[1].kappa();
      f.mul_term(Rational(1), qf.pow(static_cast<long>(m) * mu.components()[1].size()));
      f.mul_term(Rational(1), Monomial::var_pow2(vars::q(), -static_cast<long>(m) * kap));
      for (int alpha = 1; alpha <= 2; ++alpha)
        for (int gamma = 1; gamma <= 2; ++gamma) mul_stable_pair_product(f, mu, alpha, gamma, L);
      out.add({k}, f);
    }
  }
  return out.substitute(vars::e(1), Rational(-1), Monomial());
}

TruncatedSeries zhat_rank_general(int N, int m, int q_cutoff) {
  const int K = (N + m - 1) / 2;
  TruncatedSeries out({vars::Q()}, {q_cutoff});
  const Rational base_scale = rat((N + m) % 2 == 0 ? 1 : -1, 1L << (2 * N));
  for (int k = 0; k <= q_cutoff; ++k) {
    // the base-class sign (-1)^N is absorbed into the collected Q
    const Rational level =
        rat_pow(base_scale, k) * rat_pow(Rational(N % 2 == 0 ? 1 : -1), k);
    for (const auto& mu : enumerate_multipartitions(N, k)) {
      const int L = stabilization_bound(mu);
      FactoredRational f(level);
      if (m != 0) {
        Monomial fiber;  // telescoped fiber-class monomial
        long running = 0;
        for (int i = 1; i <= N - 1; ++i) {
          running += mu.components()[i - 1].size();
          Monomial qf = Monomial::var(vars::e(i)) * Monomial::var(vars::e(i + 1), -1);
          fiber *= i <= K ? qf.pow(running) : qf.pow(running - k);
        }
        f.mul_term(rat_pow(Rational(k % 2 == 0 ? 1 : -1), m), fiber.pow(m));
        long kap = 0;
        for (const auto& c : mu.components()) kap += c.kappa();
        f.mul_term(Rational(1), Monomial::var_pow2(vars::q(), static_cast<long>(m) * kap));
      }
      for (int alpha = 1; alpha <= N; ++alpha)
        for (int gamma = 1; gamma <= N; ++gamma) mul_stable_pair_product(f, mu, alpha, gamma, L);
      out.add({k}, f);
    }
  }
  return out.substitute(vars::e(K + 1), Rational(1), Monomial());
}

}  // namespace

TruncatedSeries zhat_rank(int N, int m, int q_cutoff) {
  if (N < 2) throw std::invalid_argument("rank at least two");
  if (N == 2) return zhat_rank_n2(m, q_cutoff);
  return zhat_rank_general(N, m, q_cutoff);
}

TruncatedSeries zhat_rank_gauge_side(int N, int m, int q_cutoff) {
  if (N < 2) throw std::invalid_argument("rank at least two");
  const int twist = N == 2 ? m : -m;
  TruncatedSeries s = twisted_index_series(N, twist, q_cutoff)
                          .substitute(vars::t1(), Rational(1), qv(1))
                          .substitute(vars::t2(), Rational(1), qv(-1));
  if (N == 2) return s.substitute(vars::e(1), Rational(-1), Monomial());
  const int K = (N + m - 1) / 2;
  return s.substitute(vars::e(K + 1), Rational(1), Monomial());
}

}  // namespace eqgen
