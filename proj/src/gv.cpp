#include "eqgen/gv.hpp"

#include <algorithm>
#include <numeric>

#include "eqgen/schur.hpp"
#include "eqgen/variables.hpp"

namespace eqgen {

namespace {

Monomial qpow(long e) { return Monomial::var(vars::q(), e); }

int mobius_mu(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

long long to_integer(const Rational& r, const char* what) {
  if (!is_integer(r)) throw GvStructureError(std::string("non-integer ") + what);
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("invariant exceeds machine range");
  return r.get_num().get_si();
}

// w = q - 2 + q^{-1}
LaurentPoly w_poly() {
  LaurentPoly w;
  w.add_term(Rational(1), qpow(1));
  w.add_term(Rational(-2), Monomial());
  w.add_term(Rational(1), qpow(-1));
  return w;
}

LaurentPoly chi_poly(int g) {
  LaurentPoly chi;
  for (int e = -g; e <= g; e += 2) chi.add_term(Rational(1), qpow(e));
  return chi;
}

void check_palindromic(const LaurentPoly& X) {
  std::int64_t top2 = X.max_exp2(vars::q());
  std::int64_t bot2 = X.min_exp2(vars::q());
  if (top2 % 2 != 0 || top2 != -bot2)
    throw GvStructureError("class profile is not palindromic on the integer lattice");
}

std::map<int, Rational> peel_w_basis(LaurentPoly X) {
  std::map<int, Rational> out;
  const LaurentPoly w = w_poly();
  while (!X.is_zero()) {
    check_palindromic(X);
    const std::int64_t top2 = X.max_exp2(vars::q());
    int g = static_cast<int>(top2 / 2);
    Rational c = X.coefficient(g == 0 ? Monomial() : qpow(g));
    out[g] = c;
    if (g == 0) break;
    LaurentPoly wg(c);
    for (int i = 0; i < g; ++i) wg *= w;
    X -= wg;
    if (!X.is_zero() && X.max_exp2(vars::q()) >= top2)
      throw GvStructureError("basis peeling stalled");
  }
  return out;
}

std::map<int, Rational> peel_chi_basis(LaurentPoly X) {
  std::map<int, Rational> out;
  while (!X.is_zero()) {
    check_palindromic(X);
    const std::int64_t top2 = X.max_exp2(vars::q());
    int g = static_cast<int>(top2 / 2);
    Rational c = X.coefficient(g == 0 ? Monomial() : qpow(g));
    out[g] = c;
    LaurentPoly chig = chi_poly(g);
    chig.mul_scalar(c);
    X -= chig;
    if (g == 0) break;
    if (!X.is_zero() && X.max_exp2(vars::q()) >= top2)
      throw GvStructureError("basis peeling stalled");
  }
  return out;
}

}  // namespace

bool ClassLattice::contains(const std::vector<int>& c) const {
  if (c.size() != vars.size()) return false;
  bool nonzero = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < bounds[i].first || c[i] > bounds[i].second) return false;
    nonzero = nonzero || c[i] != 0;
  }
  return nonzero;
}

std::map<ClassPoint, FactoredRational> free_energy_classes(const TruncatedSeries& Z,
                                                           const ClassLattice& lat) {
  TruncatedSeries F = Z.log();
  std::vector<int> gpos(lat.vars.size(), -1);
  for (std::size_t i = 0; i < lat.vars.size(); ++i)
    for (std::size_t g = 0; g < F.gvars().size(); ++g)
      if (F.gvars()[g] == lat.vars[i]) gpos[i] = static_cast<int>(g);

  std::map<ClassPoint, FactoredRational> out;
  for (const auto& [e, coef] : F.terms()) {
    std::map<ClassPoint, FactoredRational> slices{{ClassPoint{}, coef}};
    for (std::size_t i = 0; i < lat.vars.size(); ++i) {
      std::map<ClassPoint, FactoredRational> next;
      for (auto& [cls, val] : slices) {
        if (gpos[i] >= 0) {
          ClassPoint c = cls;
          c.push_back(e[gpos[i]]);
          next.emplace(std::move(c), std::move(val));
        } else {
          for (auto& [e2, piece] : val.split_by_var(lat.vars[i])) {
            if (e2 % 2 != 0) throw GvStructureError("half-integer class exponent");
            ClassPoint c = cls;
            c.push_back(static_cast<int>(e2 / 2));
            next.emplace(std::move(c), std::move(piece));
          }
        }
      }
      slices = std::move(next);
    }
    for (auto& [cls, val] : slices) {
      if (!lat.contains(cls)) continue;
      auto it = out.find(cls);
      if (it == out.end())
        out.emplace(cls, std::move(val));
      else
        it->second += val;
    }
  }
  return out;
}

std::map<ClassPoint, FactoredRational> mobius_invert(
    const std::map<ClassPoint, FactoredRational>& F, const ClassLattice& lat) {
  (void)lat;  // divisors of an in-box class stay in the box
  std::map<ClassPoint, FactoredRational> G;
  for (const auto& [beta, f] : F) {
    int g = 0;
    for (int c : beta) g = std::gcd(g, std::abs(c));
    FactoredRational acc = f;
    for (int k = 2; k <= g; ++k) {
      if (g % k != 0) continue;
      int mu = mobius_mu(k);
      if (mu == 0) continue;
      ClassPoint sub(beta.size());
      for (std::size_t i = 0; i < beta.size(); ++i) sub[i] = beta[i] / k;
      auto it = F.find(sub);
      if (it == F.end()) continue;
      FactoredRational t = it->second.adams(k);
      t.mul_scalar(rat(mu, k));
      acc += t;
    }
    if (!acc.is_zero()) G.emplace(beta, std::move(acc));
  }
  return G;
}

std::pair<std::map<int, long long>, std::map<int, long long>> extract_invariants(
    const FactoredRational& G, VarId q) {
  if (q != vars::q()) throw std::invalid_argument("extraction is set up for the q lattice");
  FactoredRational Xf = G * FactoredRational(w_poly());
  auto X = Xf.to_laurent();
  if (!X) throw GvStructureError("non-polynomial remainder in a class coefficient");
  std::map<int, long long> n, N;
  if (X->is_zero()) return {n, N};
  for (auto [g, c] : peel_w_basis(*X)) {
    long long v = to_integer(c, "genus multiplicity");
    if (v != 0) n[g] = (g % 2 == 0 ? -v : v);  // n^g = (-1)^{g-1} [w^g]
  }
  for (auto [g, c] : peel_chi_basis(-*X)) {
    long long v = to_integer(c, "character multiplicity");
    if (v != 0) N[g] = v;
  }
  return {n, N};
}

GVTable extract_gv(const std::map<ClassPoint, FactoredRational>& G, VarId q) {
  GVTable t;
  for (const auto& [cls, g] : G) {
    auto [n, N] = extract_invariants(g, q);
    if (!n.empty()) t.n[cls] = std::move(n);
    if (!N.empty()) t.N[cls] = std::move(N);
  }
  return t;
}

std::map<int, long long> n_to_N(const std::map<int, long long>& n) {
  LaurentPoly P;
  const LaurentPoly w = w_poly();
  for (auto [g, v] : n) {
    LaurentPoly wg(rat(static_cast<long>(g % 2 == 0 ? v : -v)));
    for (int i = 0; i < g; ++i) wg *= w;
    P += wg;
  }
  std::map<int, long long> N;
  if (P.is_zero()) return N;
  for (auto [g, c] : peel_chi_basis(P)) {
    long long v = to_integer(c, "character multiplicity");
    if (v != 0) N[g] = v;
  }
  return N;
}

std::map<int, long long> N_to_n(const std::map<int, long long>& N) {
  LaurentPoly P;
  for (auto [g, v] : N) {
    LaurentPoly chi = chi_poly(g);
    chi.mul_scalar(rat(static_cast<long>(v)));
    P += chi;
  }
  std::map<int, long long> n;
  if (P.is_zero()) return n;
  for (auto [g, c] : peel_w_basis(P)) {
    long long v = to_integer(c, "genus multiplicity");
    if (v != 0) n[g] = (g % 2 == 0 ? v : -v);
  }
  return n;
}

std::map<ClassPoint, FactoredRational> reconstruct_free_energy(const GVTable& t,
                                                               const ClassLattice& lat, VarId q) {
  if (q != vars::q()) throw std::invalid_argument("reconstruction is set up for the q lattice");
  std::map<ClassPoint, FactoredRational> F;
  for (const auto& [beta, genera] : t.N) {
    for (int k = 1;; ++k) {
      ClassPoint target(beta.size());
      for (std::size_t i = 0; i < beta.size(); ++i) target[i] = beta[i] * k;
      if (!lat.contains(target)) break;
      // tower over repetition numbers in closed form:
      // -(1/k) sum_g N^g sum_{dk=-g..g step 2} q^{k(dk+1)} / (1-q^k)^2
      FactoredRational acc;
      for (auto [g, v] : genera) {
        for (int dk = -g; dk <= g; dk += 2) {
          FactoredRational piece(rat(static_cast<long>(-v), k));
          piece.mul_term(Rational(1), qpow(static_cast<long>(k) * (dk + 1)));
          piece.div_one_minus(Rational(1), qpow(k), 2);
          acc += piece;
        }
      }
      auto it = F.find(target);
      if (it == F.end())
        F.emplace(std::move(target), std::move(acc));
      else
        it->second += acc;
    }
  }
  return F;
}

TruncatedSeries reconstruct_Z(const GVTable& t, const ClassLattice& lat, VarId q) {
  std::vector<std::pair<VarId, int>> decl;
  for (std::size_t i = 0; i < lat.vars.size(); ++i) {
    if (lat.bounds[i].first < 0)
      throw std::invalid_argument("series reconstruction needs nonnegative class bounds");
    decl.push_back({lat.vars[i], lat.bounds[i].second});
  }
  std::sort(decl.begin(), decl.end());
  std::vector<VarId> gv;
  std::vector<int> cut;
  for (auto& [v, c] : decl) {
    gv.push_back(v);
    cut.push_back(c);
  }
  TruncatedSeries F(gv, cut);
  for (auto& [cls, val] : reconstruct_free_energy(t, lat, q)) {
    TruncatedSeries::Expo e(gv.size());
    for (std::size_t i = 0; i < lat.vars.size(); ++i) e[F.gvar_index(lat.vars[i])] = cls[i];
    F.add(e, val);
  }
  return F.exp();
}

void CoefficientTable::set(std::array<long, 3> key, long long v) {
  if (v == 0)
    t.erase(key);
  else
    t[key] = v;
}

long long CoefficientTable::at(std::array<long, 3> key) const {
  auto it = t.find(key);
  return it == t.end() ? 0 : it->second;
}

CoefficientTable c_table(int p_cutoff) {
  const VarId y = vars::y(), p = vars::p();
  TruncatedSeries s = TruncatedSeries::unit({p}, {p_cutoff});
  for (int n = 1; n <= p_cutoff; ++n) {
    for (const Monomial& num : {Monomial::var(y) * qpow(1), Monomial::var(y, -1) * qpow(-1),
                                Monomial::var(y) * qpow(-1), Monomial::var(y, -1) * qpow(1)}) {
      TruncatedSeries b = TruncatedSeries::unit({p}, {p_cutoff});
      b.add({n}, FactoredRational::term(Rational(-1), num));
      s *= b;
    }
    for (const Monomial& den : {qpow(1), qpow(-1)}) {
      TruncatedSeries g({p}, {p_cutoff});
      for (int j = 0; n * j <= p_cutoff; ++j)
        g.set({n * j}, FactoredRational::term(Rational(1), den.pow(j)));
      s *= g * g;
    }
  }
  CoefficientTable out;
  for (const auto& [e, coef] : s.terms()) {
    auto lp = coef.to_laurent();
    if (!lp) throw GvStructureError("block coefficients must be Laurent polynomials");
    for (const auto& [m, c] : lp->terms()) {
      if (m.exp2(vars::q()) % 2 != 0 || m.exp2(y) % 2 != 0)
        throw GvStructureError("block coefficients live on the integer lattice");
      out.set({e[0], m.exp2(vars::q()) / 2, m.exp2(y) / 2}, to_integer(c, "block coefficient"));
    }
  }
  return out;
}

CoefficientTable fold_to_ctilde(const CoefficientTable& C) {
  for (const auto& [key, v] : C.t)
    if (C.at({key[0], -key[1], key[2]}) != v || C.at({key[0], key[1], -key[2]}) != v)
      throw GvStructureError("coefficient table lacks the reflection symmetries");
  CoefficientTable out;
  std::map<std::pair<long, long>, std::map<long, long long>> profiles;
  for (const auto& [key, v] : C.t) profiles[{key[0], key[2]}][key[1]] = v;
  for (auto& [ac, prof] : profiles) {
    while (!prof.empty()) {
      long top = std::max(std::labs(prof.begin()->first), std::labs(prof.rbegin()->first));
      long long v = prof.count(top) ? prof.at(top) : 0;
      if (v == 0) throw GvStructureError("profile peeling stalled");
      for (long b = -top; b <= top; b += 2) {
        long long nv = (prof.count(b) ? prof[b] : 0) - v;
        if (nv == 0)
          prof.erase(b);
        else
          prof[b] = nv;
      }
      out.set({ac.first, top, ac.second}, v);  // middle slot stores the doubled spin
      if (top == 0) break;
    }
  }
  return out;
}

CoefficientTable unfold_ctilde(const CoefficientTable& Ct) {
  CoefficientTable out;
  for (const auto& [key, v] : Ct.t)
    for (long b = -key[1]; b <= key[1]; b += 2) out.set({key[0], b, key[2]}, out.at({key[0], b, key[2]}) + v);
  return out;
}

TruncatedSeries product_from_ctilde(const CoefficientTable& Ct, int q_cutoff, int p_cutoff) {
  const VarId y = vars::y();
  TruncatedSeries F({vars::p(), vars::Q()}, {p_cutoff, q_cutoff});
  for (int r = 1; r <= q_cutoff; ++r) {
    for (int s = 0; s <= p_cutoff; ++s) {
      FactoredRational acc;
      for (int n = 1; n <= r; ++n) {
        if (r % n != 0 || s % n != 0) continue;
        long l = r / n, a = s / n;
        for (const auto& [key, v] : Ct.t) {
          if (key[0] != l * a) continue;
          long tj = key[1], c = key[2];
          for (long dk = -tj; dk <= tj; dk += 2) {
            LaurentPoly quad;
            quad.add_term(Rational(1), qpow(n * (dk + 1)) * Monomial::var(y, n * (c - 1)));
            quad.add_term(Rational(-1), qpow(n * (dk + 2)) * Monomial::var(y, n * c));
            quad.add_term(Rational(-1), qpow(n * dk) * Monomial::var(y, n * c));
            quad.add_term(Rational(1), qpow(n * (dk + 1)) * Monomial::var(y, n * (c + 1)));
            FactoredRational piece(quad);
            piece.mul_scalar(rat(static_cast<long>(-v), n));
            piece.div_one_minus(Rational(1), qpow(n), 2);
            acc += piece;
          }
        }
      }
      if (!acc.is_zero()) F.add({s, r}, acc);
    }
  }
  return F.exp();
}

GVExtraction conifold_gv(int max_degree) {
  GVExtraction out;
  out.lattice = {{vars::Q()}, {{0, max_degree}}};
  TruncatedSeries Z = conifold_series_hook(max_degree);
  out.connected = mobius_invert(free_energy_classes(Z, out.lattice), out.lattice);
  out.table = extract_gv(out.connected, vars::q());
  out.notes.push_back("orientation: the primitive class carries n^0 = N^0 = +1");
  return out;
}

GVExtraction five_d_gv(int r_max, int s_max) {
  GVExtraction out;
  out.lattice = {{vars::Qm(), vars::Q()}, {{0, s_max}, {0, r_max}}};
  out.connected = mobius_invert(free_energy_classes(zhat_5d(r_max), out.lattice), out.lattice);
  out.table = extract_gv(out.connected, vars::q());
  out.notes.push_back("orientation anchored at the conifold; odd-genus rows are the negatives of"
                      " the reciprocal-product convention");
  return out;
}

GVExtraction six_d_gv(int q_cutoff, int rho_cutoff, int qm_bound) {
  GVExtraction out;
  out.lattice = {{vars::Qm(), vars::Qrho(), vars::Q()},
                 {{-qm_bound, qm_bound}, {0, rho_cutoff}, {0, q_cutoff}}};
  // classes in the reduced basis: one mass-class unit per base-class unit is
  // scaled out of the counting variable
  TruncatedSeries Z =
      zhat_6d(q_cutoff, rho_cutoff).scale_grading(vars::Q(), Rational(1), Monomial::var(vars::Qm(), -1));
  out.connected = mobius_invert(free_energy_classes(Z, out.lattice), out.lattice);
  out.table = extract_gv(out.connected, vars::q());
  out.notes.push_back("mass-parameter class kept unflipped, reduced against the base class");
  return out;
}

GVTable six_d_prediction(const CoefficientTable& Ct, const ClassLattice& lat) {
  // lattice order is (Qm, Qrho, Q)
  GVTable t;
  auto bump = [&](int qm, int rho, int q, int g, long long dv) {
    ClassPoint cls{qm, rho, q};
    if (!lat.contains(cls) || dv == 0) return;
    long long& slot = t.N[cls][g];
    slot += dv;
    if (slot == 0) {
      t.N[cls].erase(g);
      if (t.N[cls].empty()) t.N.erase(cls);
    }
  };
  for (const auto& [key, v] : Ct.t) {
    const long A = key[0], tj = key[1], c = key[2];
    for (int l = 1; l <= lat.bounds[2].second; ++l) {
      if (A % l != 0) continue;
      int a = static_cast<int>(A / l);
      bump(static_cast<int>(c - 1), a, l, static_cast<int>(tj), v);
      bump(static_cast<int>(c + 1), a, l, static_cast<int>(tj), v);
      bump(static_cast<int>(c), a, l, static_cast<int>(tj + 1), -v);
      if (tj >= 1) bump(static_cast<int>(c), a, l, static_cast<int>(tj - 1), -v);
    }
  }
  for (auto& [cls, genera] : t.N) {
    auto n = N_to_n(genera);
    if (!n.empty()) t.n[cls] = std::move(n);
  }
  return t;
}

}  // namespace eqgen
