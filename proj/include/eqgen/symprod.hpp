#ifndef EQGEN_SYMPROD_HPP
#define EQGEN_SYMPROD_HPP

#include "eqgen/instanton.hpp"

namespace eqgen {

// Genera of the affine plane under the two-torus action.
FactoredRational plane_chi0();
FactoredRational plane_chiy();
// Two-variable genus as a series in the nome p (carries the y^{-1} unit).
TruncatedSeries plane_elliptic(int p_cutoff);

// Orbifold genus generating series of the symmetric products of the plane,
// over all orders up to the Q cutoff at once.
TruncatedSeries sym_series(GenusFlavor flavor, int q_cutoff, int p_cutoff = 0);

// Single twisted-sector localization sum at order n: one fixed point per
// conjugacy class, weighted by the centralizer order.
FactoredRational orbifold_chi0(int n);

// Character of the k-th symmetric power of the polynomial-ring alphabet
// truncated at total degree <= window: an independent brute-force oracle.
LaurentPoly symmetric_power_character(int k, int window);

// All terms of total degree <= window of a rational function whose
// denominator atoms have nonnegative exponents.
LaurentPoly taylor_window(const FactoredRational& f, long window);
LaurentPoly window_filter(const LaurentPoly& p, long window);

// Finite integer coefficient table of a two-variable genus:
// key = (nome order, y exponent, t1 exponent, ..., t_r exponent).
struct GenusCoefficients {
  int t_vars = 2;
  std::map<std::vector<long>, long> table;

  void set(std::vector<long> key, long value);
  static GenusCoefficients from_series(const TruncatedSeries& s, int t_vars, long y_window,
                                       long t_window);
};

// The generic identity between the cycle-sum exponential and the infinite
// product built from one table of genus coefficients, verified
// coefficientwise within the cutoffs.
bool generic_pe_identity_check(const GenusCoefficients& c, int q_cutoff, int nome_cutoff);

}  // namespace eqgen

#endif
