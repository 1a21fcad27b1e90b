#include "eqgen/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "eqgen/gv.hpp"
#include "eqgen/parallel.hpp"
#include "eqgen/schur.hpp"
#include "eqgen/symprod.hpp"
#include "eqgen/variables.hpp"

namespace eqgen {

void SuiteResult::check(bool ok, const std::string& what) {
  passed = passed && ok;
  lines.push_back(std::string(ok ? "  ok   " : "  FAIL ") + what);
}

void SuiteResult::note(const std::string& what) { lines.push_back("  note " + what); }

namespace {

Monomial qpow(long e) { return Monomial::var(vars::q(), e); }
Monomial ypow(long e) { return Monomial::var(vars::y(), e); }

TruncatedSeries at_q_inverse_q(const TruncatedSeries& s) {
  return s.substitute(vars::t1(), Rational(1), qpow(1))
      .substitute(vars::t2(), Rational(1), qpow(-1));
}

std::string order_tag(int k) { return "order " + std::to_string(k); }

// ---- thm6.1: Schur-sum = localization sum = plethystic closed form -------

SuiteResult suite_thm61(const VerifyConfig& cfg) {
  SuiteResult r{"thm6.1"};
  const int qo = cfg.q_order < 0 ? 6 : cfg.q_order;
  SymFuncContext x = principal_context(vars::t1(), 1, qo);
  SymFuncContext y = principal_context(vars::t2(), 1, qo);
  TruncatedSeries schur_sum({vars::Q()}, {qo});
  for (int d = 0; d <= qo; ++d)
    for (const auto& mu : enumerate_partitions(d))
      schur_sum.add({d}, schur_at(x, mu) * schur_at(y, mu));
  TruncatedSeries localization = genus_series(1, GenusFlavor::Chi0, qo);
  TruncatedSeries closed = sym_series(GenusFlavor::Chi0, qo);
  for (int d = 0; d <= qo; ++d) {
    FactoredRational a = schur_sum.coefficient({d});
    FactoredRational b = localization.coefficient({d});
    FactoredRational c = closed.coefficient({d});
    r.check(a.equals(b), order_tag(d) + ": Schur sum = localization sum");
    r.check(b.equals(c), order_tag(d) + ": localization sum = plethystic product");
  }
  return r;
}

// ---- eq18: weight-zero genus, four independent computations --------------

SuiteResult suite_eq18(const VerifyConfig& cfg) {
  SuiteResult r{"eq18"};
  const int qo = cfg.q_order < 0 ? 6 : cfg.q_order;
  TruncatedSeries hilb = genus_series(1, GenusFlavor::Chi0, qo);
  // exponential of the cycle sum, built literally
  TruncatedSeries arg({vars::Q()}, {qo});
  FactoredRational chi0 = plane_chi0();
  for (int m = 1; m <= qo; ++m) {
    FactoredRational t = chi0.adams(m);
    t.mul_scalar(Rational(1, m));
    arg.add({m}, t);
  }
  TruncatedSeries exp_form = arg.exp();
  const long window = qo + 1;
  for (int d = 0; d <= qo; ++d) {
    FactoredRational h = hilb.coefficient({d});
    FactoredRational orb = orbifold_chi0(d);
    r.check(h.equals(orb), order_tag(d) + ": localization = twisted-sector sum");
    r.check(h.equals(exp_form.coefficient({d})), order_tag(d) + ": localization = cycle-sum exponential");
    if (d >= 1)
      r.check(taylor_window(orb, window) == symmetric_power_character(d, window),
              order_tag(d) + ": twisted-sector sum = symmetric-power character (window " +
                  std::to_string(window) + ")");
  }
  return r;
}

// ---- eq22: chi_y of the moduli spaces vs the symmetric products ----------

SuiteResult suite_eq22(const VerifyConfig& cfg) {
  SuiteResult r{"eq22"};
  const int qo = cfg.q_order < 0 ? 5 : cfg.q_order;
  TruncatedSeries hilb = genus_series(1, GenusFlavor::ChiY, qo);
  TruncatedSeries sym = sym_series(GenusFlavor::ChiY, qo);
  for (int d = 0; d <= qo; ++d)
    r.check(hilb.coefficient({d}).equals(sym.coefficient({d})),
            order_tag(d) + ": rational functions in t1, t2, y agree");
  return r;
}

// ---- products: resolved infinite-product forms ----------------------------

SuiteResult suite_products(const VerifyConfig& cfg) {
  SuiteResult r{"products"};
  const int qo = cfg.q_order < 0 ? 5 : cfg.q_order;
  r.note("printed displays are the reciprocals of these products; the orientation below is the"
         " one the series themselves support");

  // weight-zero case: log coefficient at order r is -(1/r) q^r/(1-q^r)^2
  TruncatedSeries F0 = at_q_inverse_q(genus_series(1, GenusFlavor::Chi0, qo)).log();
  for (int d = 1; d <= qo; ++d) {
    FactoredRational expect = FactoredRational::term(rat(-1, d), qpow(d));
    expect.div_one_minus(Rational(1), qpow(d), 2);
    r.check(F0.coefficient({d}).equals(expect), order_tag(d) + ": weight-zero product exponents m");
  }

  // chi_y case against the four-family closed form
  TruncatedSeries Fy = at_q_inverse_q(genus_series(1, GenusFlavor::ChiY, qo)).log();
  auto four_family = [&](int d, const Monomial& mass) {
    FactoredRational acc;
    for (int n = 1; n <= d; ++n) {
      if (d % n != 0) continue;
      LaurentPoly num;
      num.add_term(Rational(1), mass.pow(d));
      num.add_term(Rational(1), mass.pow(d) * qpow(2 * n));
      num.add_term(Rational(-1), mass.pow(d - n) * qpow(n));
      num.add_term(Rational(-1), mass.pow(d + n) * qpow(n));
      FactoredRational piece(num);
      piece.mul_scalar(Rational(1, n));
      piece.div_one_minus(Rational(1), qpow(n), 2);
      acc += piece;
    }
    return acc;
  };
  for (int d = 1; d <= qo; ++d)
    r.check(Fy.coefficient({d}).equals(four_family(d, ypow(1))),
            order_tag(d) + ": chi_y product, four factor families");

  // the same closed form drives the mass-parameter amplitude
  TruncatedSeries F5 = zhat_5d(qo).log();
  for (int d = 1; d <= qo; ++d)
    r.check(F5.coefficient({d}).equals(four_family(d, Monomial::var(vars::Qm()))),
            order_tag(d) + ": mass-parameter product, four factor families");
  return r;
}

// ---- dmvv26: two-variable genus of the tower, both sides -----------------

SuiteResult suite_dmvv26(const VerifyConfig& cfg) {
  SuiteResult r{"dmvv26"};
  const int qo = cfg.q_order < 0 ? 3 : cfg.q_order;
  const int po = cfg.p_order < 0 ? 2 : cfg.p_order;
  r.note("conjecture: empirically checked at these orders, generic torus weights");
  auto sides = parallel_map<TruncatedSeries>(
      2,
      [&](std::size_t i) {
        return i == 0 ? genus_series(1, GenusFlavor::Elliptic, qo, po)
                      : sym_series(GenusFlavor::Elliptic, qo, po);
      },
      cfg.workers);
  for (int d = 0; d <= qo; ++d)
    for (int a = 0; a <= po; ++a)
      r.check(sides[0].coefficient({a, d}).equals(sides[1].coefficient({a, d})),
              "order (" + std::to_string(d) + ", nome " + std::to_string(a) + ")");
  return r;
}

// ---- lemma4.4: hook products vs stabilized ratio products ----------------

SuiteResult suite_lemma44(const VerifyConfig&) {
  SuiteResult r{"lemma4.4"};
  for (int N = 1; N <= 2; ++N) {
    for (int k = 0; k <= 3; ++k) {
      for (const auto& mu : enumerate_multipartitions(N, k)) {
        bool ok = konishi_hook_side(mu).equals(konishi_product_side(mu));
        std::ostringstream tag;
        tag << "rank " << N << ", tuple (";
        for (int i = 0; i < N; ++i) {
          if (i) tag << "|";
          for (std::size_t j = 0; j < mu.components()[i].parts().size(); ++j) {
            if (j) tag << ",";
            tag << mu.components()[i].parts()[j];
          }
        }
        tag << ")";
        r.check(ok, tag.str());
      }
    }
  }
  r.note("truncations at the bound and the bound + 1 agree (checked inside every product)");
  return r;
}

// ---- lemma4.3: part-offset form vs the weight-based twisted index --------

SuiteResult suite_lemma43(const VerifyConfig& cfg) {
  SuiteResult r{"lemma4.3"};
  const int qo = cfg.q_order < 0 ? 3 : cfg.q_order;
  r.note("per-instanton constant resolved to 1/2^(2N); the alternative printed constant 1/4"
         " agrees only at rank one");
  for (int N = 1; N <= 2; ++N) {
    auto results = parallel_map<std::pair<TruncatedSeries, TruncatedSeries>>(
        3,
        [&](std::size_t m) {
          return std::make_pair(sinh_form_series(N, static_cast<int>(m), qo),
                                at_q_inverse_q(twisted_index_series(N, static_cast<int>(m), qo)));
        },
        cfg.workers);
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k <= qo; ++k)
        r.check(results[m].first.coefficient({k}).equals(results[m].second.coefficient({k})),
                "rank " + std::to_string(N) + ", twist " + std::to_string(m) + ", " + order_tag(k));
  }
  return r;
}

// ---- thm7.1 / thm7.2: string side vs gauge side ---------------------------

SuiteResult suite_thm71(const VerifyConfig& cfg) {
  SuiteResult r{"thm7.1"};
  const int qo = cfg.q_order < 0 ? 3 : cfg.q_order;
  r.note("resolved dictionary: dual determinant twist, e_1 = -1");
  auto pairs = parallel_map<std::pair<TruncatedSeries, TruncatedSeries>>(
      3,
      [&](std::size_t m) {
        return std::make_pair(zhat_rank(2, static_cast<int>(m), qo),
                              zhat_rank_gauge_side(2, static_cast<int>(m), qo));
      },
      cfg.workers);
  for (int m = 0; m <= 2; ++m)
    for (int k = 0; k <= qo; ++k)
      r.check(pairs[m].first.coefficient({k}).equals(pairs[m].second.coefficient({k})),
              "twist " + std::to_string(m) + ", " + order_tag(k));
  return r;
}

SuiteResult suite_thm72(const VerifyConfig& cfg) {
  SuiteResult r{"thm7.2"};
  const int qo = cfg.q_order < 0 ? 2 : cfg.q_order;
  r.note("resolved dictionary: determinant twist, unit framing weight at index"
         " floor((N+m-1)/2)+1");
  TruncatedSeries lhs = zhat_rank(3, 1, qo);
  TruncatedSeries rhs = zhat_rank_gauge_side(3, 1, qo);
  for (int k = 0; k <= qo; ++k)
    r.check(lhs.coefficient({k}).equals(rhs.coefficient({k})), "rank 3, twist 1, " + order_tag(k));
  return r;
}

// ---- gvtables: integer invariants of the small geometries ----------------

SuiteResult suite_gvtables(const VerifyConfig& cfg) {
  SuiteResult r{"gvtables"};
  const int deg = cfg.q_order < 0 ? 6 : cfg.q_order;
  try {
    GVExtraction coni = conifold_gv(deg);
    bool support = coni.table.N.size() == 1 && coni.table.N.count({1}) == 1 &&
                   coni.table.N.at({1}) == std::map<int, long long>{{0, 1}};
    r.check(support, "conifold: primitive class only, N^0 = 1, degrees up to " + std::to_string(deg));
    r.check(reconstruct_Z(coni.table, coni.lattice, vars::q()) == conifold_series_hook(deg),
            "conifold: table reconstructs the amplitude");
  } catch (const GvStructureError& e) {
    r.check(false, std::string("conifold: ") + e.what());
  }

  const int br = cfg.box_r < 0 ? 4 : cfg.box_r;
  const int bs = cfg.box_s < 0 ? 4 : cfg.box_s;
  try {
    GVExtraction fd = five_d_gv(br, bs);
    bool ok = true;
    for (int rr = 1; rr <= br && ok; ++rr) {
      for (int s = 0; s <= bs && ok; ++s) {
        ClassPoint cls{s, rr};
        std::map<int, long long> expect;
        if (std::abs(rr - s) == 1) expect[0] = 1;
        if (rr == s) expect[1] = -1;
        auto it = fd.table.N.find(cls);
        ok = expect.empty() ? it == fd.table.N.end() : (it != fd.table.N.end() && it->second == expect);
      }
    }
    r.check(ok, "mass-parameter geometry: N^0 on the off-diagonals, N^1 on the diagonal, box (" +
                    std::to_string(br) + "," + std::to_string(bs) + ")");
    r.note("all extracted values integral with zero remainder; diagonal genus-one entries are -1"
           " here, +1 in the reciprocal-product convention of the printed tables");
  } catch (const GvStructureError& e) {
    r.check(false, std::string("mass-parameter geometry: ") + e.what());
  }
  return r;
}

// ---- c-table: refined block coefficients and their products ---------------

SuiteResult suite_ctable(const VerifyConfig& cfg) {
  SuiteResult r{"c-table"};
  const int qo = cfg.q_order < 0 ? 3 : cfg.q_order;
  const int po = cfg.p_order < 0 ? 2 : cfg.p_order;
  CoefficientTable C = c_table(std::max(2, qo * po));

  bool a0 = C.at({0, 0, 0}) == 1;
  for (const auto& [k, v] : C.t)
    if (k[0] == 0 && k != std::array<long, 3>{0, 0, 0}) a0 = false;
  r.check(a0, "order 0 block: single unit entry");

  bool a1 = C.at({1, 1, 0}) == 2 && C.at({1, -1, 0}) == 2 && C.at({1, 1, 1}) == -1 &&
            C.at({1, 1, -1}) == -1 && C.at({1, -1, 1}) == -1 && C.at({1, -1, -1}) == -1;
  int count1 = 0;
  for (const auto& [k, v] : C.t)
    if (k[0] == 1) ++count1;
  r.check(a1 && count1 == 6, "order 1 block: entries 2 at weight 0, -1 at weight 1");

  // order 2: the printed display except its (q + 1/q) term, whose computed
  // coefficient is 2 (cross-checked against the plane-genus route)
  bool a2 = C.at({2, 0, 0}) == 6 && C.at({2, 0, 1}) == -4 && C.at({2, 0, 2}) == 1 &&
            C.at({2, 1, 0}) == 2 && C.at({2, 2, 0}) == 4 && C.at({2, 1, 1}) == -1 &&
            C.at({2, 2, 1}) == -2;
  r.check(a2, "order 2 block: oracle-resolved row");
  r.note("printed order-2 display deviates at one term: (q + 1/q) appears with coefficient 2,"
         " not 1");
  {
    TruncatedSeries pe = plane_elliptic(2)
                             .substitute(vars::t1(), Rational(1), qpow(1))
                             .substitute(vars::t2(), Rational(1), qpow(-1));
    FactoredRational pref = FactoredRational::term(Rational(1), ypow(1));
    pref.mul_one_minus(Rational(1), qpow(1));
    pref.mul_one_minus(Rational(1), qpow(-1));
    pref.div_one_minus(Rational(1), ypow(1) * qpow(1));
    pref.div_one_minus(Rational(1), ypow(1) * qpow(-1));
    pe.mul_coeff(pref);
    TruncatedSeries block({vars::p()}, {2});
    for (const auto& [k, v] : C.t)
      if (k[0] <= 2)
        block.add({static_cast<int>(k[0])},
                  FactoredRational::term(rat(static_cast<long>(v)), qpow(k[1]) * ypow(k[2])));
    r.check(block == pe, "orders 0..2 against the plane-genus route");
  }

  bool sym = true;
  for (const auto& [k, v] : C.t)
    sym = sym && C.at({k[0], -k[1], k[2]}) == v && C.at({k[0], k[1], -k[2]}) == v;
  r.check(sym, "reflection symmetries in both weights");

  CoefficientTable Ct = fold_to_ctilde(C);
  r.check(unfold_ctilde(Ct) == C, "fold and unfold round trip");

  TruncatedSeries prod = product_from_ctilde(Ct, qo, po);
  TruncatedSeries sym_ell = at_q_inverse_q(sym_series(GenusFlavor::Elliptic, qo, po));
  for (int d = 0; d <= qo; ++d)
    for (int a = 0; a <= po; ++a)
      r.check(prod.coefficient({a, d}).equals(sym_ell.coefficient({a, d})),
              "multi-cover product, order (" + std::to_string(d) + ", nome " + std::to_string(a) + ")");

  TruncatedSeries slice = prod.restrict_grading(vars::p(), 0);
  TruncatedSeries zh = zhat_5d(qo)
                           .substitute(vars::Qm(), Rational(1), ypow(1))
                           .scale_grading(vars::Q(), Rational(1), ypow(-1));
  bool slice_ok = true;
  for (int d = 0; d <= qo; ++d)
    slice_ok = slice_ok && slice.coefficient({d}).equals(zh.coefficient({d}));
  r.check(slice_ok, "nome-order-zero slice = regraded mass-parameter product");
  return r;
}

// ---- eq5-generic: the table identity on random data ----------------------

SuiteResult suite_eq5_generic(const VerifyConfig& cfg) {
  SuiteResult r{"eq5-generic"};
  std::mt19937_64 rng(20240817);
  auto draw = [&](int lo, int hi) {
    return static_cast<long>(rng() % static_cast<unsigned>(hi - lo + 1)) + lo;
  };
  const int trials = 100;
  std::vector<GenusCoefficients> tables;
  for (int i = 0; i < trials; ++i) {
    GenusCoefficients c;
    int support = static_cast<int>(draw(1, 5));
    for (int s = 0; s < support; ++s)
      c.set({draw(0, 2), draw(-2, 2), draw(-1, 2), draw(-1, 2)}, draw(-3, 3));
    tables.push_back(std::move(c));
  }
  auto flags = parallel_map<bool>(
      trials, [&](std::size_t i) { return generic_pe_identity_check(tables[i], 3, 2); },
      cfg.workers);
  bool all = std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
  r.check(all, std::to_string(trials) + " random coefficient tables");
  return r;
}

// ---- structural: property checks across the kernel ------------------------

SuiteResult suite_structural(const VerifyConfig& cfg) {
  SuiteResult r{"structural"};
  // tangent weights
  bool weights_ok = true;
  for (int N = 1; N <= 3 && weights_ok; ++N) {
    for (int k = 0; k <= 4 && weights_ok; ++k) {
      for (const auto& mu : enumerate_multipartitions(N, k)) {
        WeightList ws = tangent_weights(FixedPoint{mu});
        weights_ok = weights_ok && static_cast<int>(ws.size()) == 2 * N * k;
        WeightList mapped;
        Monomial tt = Monomial::var(vars::t1()) * Monomial::var(vars::t2());
        for (const Monomial& w : ws) mapped.push_back(tt * w.inverse());
        std::sort(ws.begin(), ws.end());
        std::sort(mapped.begin(), mapped.end());
        weights_ok = weights_ok && ws == mapped;
      }
    }
  }
  r.check(weights_ok, "tangent weights: 2Nk count and symplectic closure, ranks up to 3");

  bool kappa_ok = true;
  for (int n = 0; n <= 12 && kappa_ok; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      long alt = mu.size();
      for (int i = 1; i <= mu.length(); ++i) {
        long mi = mu.part(i);
        alt += mi * mi - 2 * i * mi;
      }
      kappa_ok = kappa_ok && mu.kappa() == alt && mu.transpose().kappa() == -mu.kappa();
    }
  }
  r.check(kappa_ok, "framing weight: both closed forms, odd under transposition, sizes up to 12");

  std::mt19937_64 rng(7);
  bool basis_ok = true;
  for (int trial = 0; trial < 100 && basis_ok; ++trial) {
    std::map<int, long long> v;
    for (int g = 0; g <= 5; ++g) {
      long long x = static_cast<long long>(rng() % 11) - 5;
      if (x != 0) v[g] = x;
    }
    basis_ok = basis_ok && N_to_n(n_to_N(v)) == v && n_to_N(N_to_n(v)) == v;
  }
  r.check(basis_ok, "multiplicity basis change: round trips on random vectors");

  auto random_series = [&](int cutoff) {
    TruncatedSeries s({vars::Q()}, {cutoff});
    for (int t = 0; t < 6; ++t) {
      int k = 1 + static_cast<int>(rng() % cutoff);
      FactoredRational f = FactoredRational::term(
          rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2)),
          Monomial::var_pow2(vars::q(), static_cast<long>(rng() % 5) - 2));
      if (rng() % 2) f.div_one_minus(Rational(1), Monomial::var(vars::t1(), 1 + rng() % 2));
      s.add({k}, f);
    }
    return s;
  };
  bool laws_ok = true;
  for (int trial = 0; trial < 15 && laws_ok; ++trial) {
    TruncatedSeries a = random_series(5), b = random_series(5);
    laws_ok = laws_ok && a.exp().log() == a;
    laws_ok = laws_ok && a.adams(2).adams(3) == a.adams(6);
    laws_ok = laws_ok && (a + b).pe() == a.pe() * b.pe();
  }
  r.check(laws_ok, "series laws: exp/log round trip, Adams composition, plethystic multiplicativity");
  (void)cfg;
  return r;
}

using SuiteFn = SuiteResult (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"thm6.1", suite_thm61},     {"eq18", suite_eq18},
      {"eq22", suite_eq22},        {"products", suite_products},
      {"dmvv26", suite_dmvv26},    {"lemma4.4", suite_lemma44},
      {"lemma4.3", suite_lemma43}, {"thm7.1", suite_thm71},
      {"thm7.2", suite_thm72},     {"gvtables", suite_gvtables},
      {"c-table", suite_ctable},   {"eq5-generic", suite_eq5_generic},
      {"structural", suite_structural},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, fn] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

bool has_suite(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(cfg);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace eqgen
