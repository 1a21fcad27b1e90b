#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eqgen/symprod.hpp"
#include "eqgen/variables.hpp"

using namespace eqgen;

TEST_CASE("plane genera") {
  FactoredRational chi0 = plane_chi0();
  FactoredRational expect = FactoredRational::one();
  expect.div_one_minus(rat(1), Monomial::var(vars::t1()));
  expect.div_one_minus(rat(1), Monomial::var(vars::t2()));
  CHECK(chi0.equals(expect));

  // chi_y = chi_0 (1 - y t1 - y t2 + y^2 t1 t2)
  LaurentPoly h = LaurentPoly::one();
  h.add_term(rat(-1), Monomial::var(vars::y()) * Monomial::var(vars::t1()));
  h.add_term(rat(-1), Monomial::var(vars::y()) * Monomial::var(vars::t2()));
  h.add_term(rat(1), Monomial::var(vars::y(), 2) * Monomial::var(vars::t1()) *
                         Monomial::var(vars::t2()));
  CHECK(plane_chiy().equals(chi0 * FactoredRational(h)));

  // the two-variable genus at nome order zero recovers chi_y after the unit
  TruncatedSeries ell = plane_elliptic(2);
  FactoredRational p0 = ell.coefficient({0});
  p0.mul_term(rat(1), Monomial::var(vars::y()));
  CHECK(p0.equals(plane_chiy()));
}

TEST_CASE("orbifold localization sums") {
  CHECK(orbifold_chi0(0).is_one());
  CHECK(orbifold_chi0(1).equals(plane_chi0()));

  // n = 2: untwisted sector + transposition sector
  FactoredRational a(rat(1, 2));
  a.div_one_minus(rat(1), Monomial::var(vars::t1()), 2);
  a.div_one_minus(rat(1), Monomial::var(vars::t2()), 2);
  FactoredRational b(rat(1, 2));
  b.div_one_minus(rat(1), Monomial::var(vars::t1(), 2));
  b.div_one_minus(rat(1), Monomial::var(vars::t2(), 2));
  CHECK(orbifold_chi0(2).equals(a + b));
}

TEST_CASE("symmetric product series, weight-zero flavor") {
  TruncatedSeries s = sym_series(GenusFlavor::Chi0, 6);
  CHECK(s.coefficient({0}).is_one());
  for (int n = 0; n <= 6; ++n) CHECK(s.coefficient({n}).equals(orbifold_chi0(n)));

  // symmetric-power character oracle, truncated alphabet
  for (int n = 1; n <= 4; ++n) {
    long window = 6;
    CHECK(taylor_window(s.coefficient({n}), window) == symmetric_power_character(n, window));
  }
}

TEST_CASE("first order of the chi_y flavor") {
  TruncatedSeries s = sym_series(GenusFlavor::ChiY, 3);
  CHECK(s.coefficient({0}).is_one());
  CHECK(s.coefficient({1}).equals(plane_chiy()));
}

TEST_CASE("two-variable flavor degenerates to chi_y with the shifted grading") {
  TruncatedSeries ell = sym_series(GenusFlavor::Elliptic, 3, 2);
  TruncatedSeries at0 = ell.restrict_grading(vars::p(), 0)
                            .scale_grading(vars::Q(), rat(1), Monomial::var(vars::y()));
  CHECK(at0 == sym_series(GenusFlavor::ChiY, 3));
}

TEST_CASE("moduli-space genera match symmetric products at rank one") {
  CHECK(genus_series(1, GenusFlavor::Chi0, 4) == sym_series(GenusFlavor::Chi0, 4));
  CHECK(genus_series(1, GenusFlavor::ChiY, 3) == sym_series(GenusFlavor::ChiY, 3));
  CHECK(genus_series(1, GenusFlavor::Elliptic, 2, 1) == sym_series(GenusFlavor::Elliptic, 2, 1));
}

TEST_CASE("generic identity for explicit tables") {
  // constant table
  GenusCoefficients c;
  c.set({0, 0, 0, 0}, 1);
  CHECK(generic_pe_identity_check(c, 4, 2));

  // nontrivial nome dependence
  GenusCoefficients d;
  d.set({0, 0, 0, 0}, 2);
  d.set({1, 1, 1, 0}, -1);
  d.set({2, -1, 0, 1}, 3);
  CHECK(generic_pe_identity_check(d, 4, 3));

  // weight-one table of the plane at nome order zero
  TruncatedSeries plane = plane_elliptic(1);
  GenusCoefficients pl = GenusCoefficients::from_series(plane, 2, 3, 3);
  GenusCoefficients order0;
  for (const auto& [k, v] : pl.table)
    if (k[0] == 0) order0.set(k, v);
  CHECK(generic_pe_identity_check(order0, 3, 2));
}

TEST_CASE("generic identity on random tables") {
  std::mt19937_64 rng(99);
  auto small = [&](int lo, int hi) {
    return static_cast<long>(rng() % static_cast<unsigned>(hi - lo + 1)) + lo;
  };
  for (int trial = 0; trial < 25; ++trial) {
    GenusCoefficients c;
    int support = static_cast<int>(small(1, 5));
    for (int i = 0; i < support; ++i)
      c.set({small(0, 2), small(-2, 2), small(-1, 2), small(-1, 2)}, small(-3, 3));
    CHECK(generic_pe_identity_check(c, 3, 2));
  }
}
