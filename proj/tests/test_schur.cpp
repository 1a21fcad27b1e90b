#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqgen/schur.hpp"
#include "eqgen/symprod.hpp"
#include "eqgen/variables.hpp"

using namespace eqgen;

namespace {
Monomial qv(long e) { return Monomial::var(vars::q(), e); }
}

TEST_CASE("schur values from the h-determinant") {
  SymFuncContext ctx = principal_context(vars::q(), 1, 8);
  CHECK(schur_at(ctx, Partition()).is_one());
  CHECK(schur_at(ctx, Partition({1})).equals(ctx.p[1]));

  // h_2 = (p_1^2 + p_2)/2
  FactoredRational h2 = ctx.p[1] * ctx.p[1] + ctx.p[2];
  h2.mul_scalar(rat(1, 2));
  CHECK(schur_at(ctx, Partition({2})).equals(h2));

  // one-row and one-column shapes against the recurrence values
  for (int n = 1; n <= 6; ++n) {
    CHECK(schur_at(ctx, Partition({n})).equals(ctx.h[n]));
    CHECK(schur_at(ctx, Partition(std::vector<int>(n, 1))).equals(ctx.e[n]));
  }
}

TEST_CASE("hook-length closed form of the principal value") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& mu : enumerate_partitions(n))
      CHECK(schur_w(mu, vars::q(), 1, 6).equals(w_hook_form(mu, vars::q())));
}

TEST_CASE("resolved-conifold amplitude three ways") {
  TruncatedSeries hook = conifold_series_hook(6);
  CHECK(conifold_series_schur(6) == hook);
  CHECK(conifold_series_pe(6) == hook);

  // single box: -q/(1-q)^2
  FactoredRational expect = FactoredRational::term(rat(-1), qv(1));
  expect.div_one_minus(rat(1), qv(1), 2);
  CHECK(hook.coefficient({1}).equals(expect));

  // localization sum at (q, 1/q)
  TruncatedSeries hilb = genus_series(1, GenusFlavor::Chi0, 6)
                             .substitute(vars::t1(), rat(1), qv(1))
                             .substitute(vars::t2(), rat(1), qv(-1));
  CHECK(hilb == hook);
}

TEST_CASE("diagonal and transposed Cauchy identities") {
  CHECK(cauchy_same_partition_check(6));
  CHECK(cauchy_dual_partition_check(4));
}

TEST_CASE("one-parameter hook amplitude") {
  TruncatedSeries z = zhat_5d(4);
  CHECK(z.coefficient({0}).is_one());

  FactoredRational expect = FactoredRational::one();
  expect.mul_one_minus(rat(1), Monomial::var(vars::Qm()) * qv(1));
  expect.mul_one_minus(rat(1), Monomial::var(vars::Qm()) * qv(-1));
  expect.div_one_minus(rat(1), qv(1));
  expect.div_one_minus(rat(1), qv(-1));
  CHECK(z.coefficient({1}).equals(expect));

  TruncatedSeries hilb = genus_series(1, GenusFlavor::ChiY, 4)
                             .substitute(vars::t1(), rat(1), qv(1))
                             .substitute(vars::t2(), rat(1), qv(-1))
                             .substitute(vars::y(), rat(1), Monomial::var(vars::Qm()));
  CHECK(hilb == z);
}

TEST_CASE("compactified refinement") {
  TruncatedSeries z = zhat_6d(2, 1);
  CHECK(z.restrict_grading(vars::Qrho(), 0) == zhat_5d(2));

  TruncatedSeries ell = genus_series(1, GenusFlavor::Elliptic, 2, 1)
                            .substitute(vars::t1(), rat(1), qv(1))
                            .substitute(vars::t2(), rat(1), qv(-1))
                            .substitute(vars::y(), rat(1), Monomial::var(vars::Qm()))
                            .rename_gvar(vars::p(), vars::Qrho())
                            .scale_grading(vars::Q(), rat(1), Monomial::var(vars::Qm()));
  CHECK(ell == z);
}

TEST_CASE("rank-two string side equals the twisted gauge side") {
  for (int m = 0; m <= 2; ++m) {
    CAPTURE(m);
    CHECK(zhat_rank(2, m, 2) == zhat_rank_gauge_side(2, m, 2));
  }
}

TEST_CASE("rank-three string side equals the twisted gauge side") {
  CHECK(zhat_rank(3, 1, 1) == zhat_rank_gauge_side(3, 1, 1));
}
