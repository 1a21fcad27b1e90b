#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eqgen/series.hpp"
#include "eqgen/variables.hpp"

using namespace eqgen;

namespace {

TruncatedSeries qseries(int cutoff) { return TruncatedSeries({vars::Q()}, {cutoff}); }

TruncatedSeries geometric_Q(int cutoff) {
  // 1/(1-Q)
  TruncatedSeries s = qseries(cutoff);
  for (int k = 0; k <= cutoff; ++k) s.set({k}, FactoredRational::one());
  return s;
}

struct Gen {
  std::mt19937_64 rng{7};
  int small(int lo, int hi) {
    return static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)) + lo;
  }
  FactoredRational coeff() {
    FactoredRational f = FactoredRational::term(
        rat(small(-3, 3), small(1, 2)), Monomial::var_pow2(vars::q(), small(-2, 2)));
    if (small(0, 1)) f.div_one_minus(rat(1), Monomial::var(vars::t1(), small(1, 2)));
    return f;
  }
  // random series with zero constant term, <= 8 nonzero slots
  TruncatedSeries nilpotent(int cutoff) {
    TruncatedSeries s = qseries(cutoff);
    for (int t = 0; t < 8; ++t) {
      int k = small(1, cutoff);
      s.add({k}, coeff());
    }
    return s;
  }
};

}  // namespace

TEST_CASE("exp and log basics") {
  TruncatedSeries zero = qseries(6);
  CHECK(zero.exp() == TruncatedSeries::unit({vars::Q()}, {6}));

  // log(1/(1-Q)) = sum Q^n/n
  TruncatedSeries l = geometric_Q(6).log();
  for (int n = 1; n <= 6; ++n) CHECK(l.coefficient({n}).equals(FactoredRational(rat(1, n))));
}

TEST_CASE("exp log round trips") {
  Gen gen;
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries s = gen.nilpotent(6);
    CHECK(s.exp().log() == s);
    TruncatedSeries one_plus = s;
    one_plus.add({0}, FactoredRational::one());
    CHECK(one_plus.log().exp() == one_plus);
  }
}

TEST_CASE("adams on series") {
  // psi_2(Q/(1-q)) = Q^2/(1-q^2)
  TruncatedSeries s = qseries(4);
  FactoredRational f = FactoredRational::one();
  f.div_one_minus(rat(1), Monomial::var(vars::q()));
  s.set({1}, f);
  TruncatedSeries t = s.adams(2);
  FactoredRational expect = FactoredRational::one();
  expect.div_one_minus(rat(1), Monomial::var(vars::q(), 2));
  CHECK(t.coefficient({2}).equals(expect));
  CHECK(t.coefficient({1}).is_zero());

  // psi_j o psi_k = psi_{jk}
  Gen gen;
  for (int trial = 0; trial < 10; ++trial) {
    TruncatedSeries r = gen.nilpotent(6);
    CHECK(r.adams(2).adams(3) == r.adams(6));
  }
}

TEST_CASE("plethystic exponential") {
  // PE[Q] = 1/(1-Q)
  TruncatedSeries s = qseries(6);
  s.set({1}, FactoredRational::one());
  CHECK(s.pe() == geometric_Q(6));

  // PE[m Q] = 1/(1 - m Q): coefficient of Q^k is m^k
  TruncatedSeries t = qseries(5);
  Monomial m = Monomial::var(vars::q(), 2) * Monomial::var(vars::t1(), -1);
  t.set({1}, FactoredRational::term(rat(1), m));
  TruncatedSeries u = t.pe();
  for (int k = 0; k <= 5; ++k)
    CHECK(u.coefficient({k}).equals(FactoredRational::term(rat(1), m.pow(k))));
}

TEST_CASE("plethystic exponential is multiplicative") {
  Gen gen;
  for (int trial = 0; trial < 10; ++trial) {
    TruncatedSeries a = gen.nilpotent(5);
    TruncatedSeries b = gen.nilpotent(5);
    CHECK((a + b).pe() == a.pe() * b.pe());
  }
}

TEST_CASE("root of unity averaging filters exponents") {
  // coefficient-variable filtering: avg_2 of (1 + q + q^2) keeps 1 + q^2
  TruncatedSeries s = qseries(0);
  LaurentPoly p = LaurentPoly::one();
  p.add_term(rat(1), Monomial::var(vars::q()));
  p.add_term(rat(1), Monomial::var(vars::q(), 2));
  s.set({0}, FactoredRational(p));
  TruncatedSeries f2 = s.roots_filter(vars::q(), 2);
  LaurentPoly expect = LaurentPoly::one();
  expect.add_term(rat(1), Monomial::var(vars::q(), 2));
  CHECK(f2.coefficient({0}).equals(FactoredRational(expect)));

  // avg_3 of sum_{k<=6} q^k
  LaurentPoly full;
  for (int k = 0; k <= 6; ++k) full.add_term(rat(1), Monomial::var(vars::q(), k));
  TruncatedSeries s3 = qseries(0);
  s3.set({0}, FactoredRational(full));
  LaurentPoly kept;
  for (int k = 0; k <= 6; k += 3) kept.add_term(rat(1), Monomial::var(vars::q(), k));
  CHECK(s3.roots_filter(vars::q(), 3).coefficient({0}).equals(FactoredRational(kept)));

  // identity case and idempotence / linearity on the grading variable
  Gen gen;
  for (int trial = 0; trial < 10; ++trial) {
    TruncatedSeries a = gen.nilpotent(6), b = gen.nilpotent(6);
    TruncatedSeries fa = a.roots_filter(vars::Q(), 2);
    CHECK(fa.roots_filter(vars::Q(), 2) == fa);
    CHECK((a + b).roots_filter(vars::Q(), 2) == fa + b.roots_filter(vars::Q(), 2));
    CHECK(a.adams(2).roots_filter(vars::Q(), 2) == a.adams(2));
  }
}

TEST_CASE("series substitution") {
  // 1/(1 - e1 Q) with e1 -> -1 becomes 1/(1+Q)
  TruncatedSeries s = qseries(5);
  for (int k = 0; k <= 5; ++k)
    s.set({k}, FactoredRational::term(rat(1), Monomial::var(vars::e(1), k)));
  TruncatedSeries t = s.substitute(vars::e(1), rat(-1), Monomial());
  for (int k = 0; k <= 5; ++k)
    CHECK(t.coefficient({k}).equals(FactoredRational(rat(k % 2 == 0 ? 1 : -1))));
}

TEST_CASE("coefficient access and cutoffs") {
  TruncatedSeries s = geometric_Q(3);
  CHECK(s.coefficient({3}).is_one());
  CHECK_THROWS(s.coefficient({4}));

  // coefficient of Q^2 in exp(Q/(1-q)) is 1/(2 (1-q)^2)
  TruncatedSeries e = qseries(3);
  FactoredRational f = FactoredRational::one();
  f.div_one_minus(rat(1), Monomial::var(vars::q()));
  e.set({1}, f);
  FactoredRational expect(rat(1, 2));
  expect.div_one_minus(rat(1), Monomial::var(vars::q()), 2);
  CHECK(e.exp().coefficient({2}).equals(expect));
}

TEST_CASE("grading utilities") {
  Gen gen;
  TruncatedSeries a = gen.nilpotent(5);
  TruncatedSeries b = a.with_gvar(vars::p(), 2);
  CHECK(b.gvars().size() == 2);
  CHECK(b.restrict_grading(vars::p(), 0) == a);

  // scale_grading multiplies the Q^k coefficient by m^k
  TruncatedSeries s = geometric_Q(3).scale_grading(vars::Q(), rat(1), Monomial::var(vars::y()));
  CHECK(s.coefficient({2}).equals(FactoredRational::term(rat(1), Monomial::var(vars::y(), 2))));

  TruncatedSeries sel = geometric_Q(4).grading_select_divide(vars::Q(), 2);
  CHECK(sel.coefficient({1}).is_one());
  CHECK(sel.coefficient({2}).is_one());
  CHECK(sel.coefficient({3}).is_zero());
}

TEST_CASE("series inverse") {
  TruncatedSeries g = geometric_Q(6);
  TruncatedSeries inv = g.inverse();
  CHECK(inv.coefficient({0}).is_one());
  CHECK(inv.coefficient({1}).equals(FactoredRational(rat(-1))));
  CHECK(inv.coefficient({2}).is_zero());
  CHECK(g * inv == TruncatedSeries::unit({vars::Q()}, {6}));
}
