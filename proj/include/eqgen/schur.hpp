#ifndef EQGEN_SCHUR_HPP
#define EQGEN_SCHUR_HPP

#include "eqgen/instanton.hpp"
#include "eqgen/partitions.hpp"
#include "eqgen/series.hpp"

namespace eqgen {

// Symmetric-function values of one alphabet, generated from its power sums:
// sum_k h_k z^k = exp sum_n p_n z^n / n, and the alternating twin for e_k.
struct SymFuncContext {
  std::vector<FactoredRational> p;  // 1-based, p[0] unused
  std::vector<FactoredRational> h;  // 0-based
  std::vector<FactoredRational> e;  // 0-based

  int bound() const { return static_cast<int>(h.size()) - 1; }
};

SymFuncContext make_context(std::vector<FactoredRational> power_sums);
// Geometric alphabet of a variable power: p_n = 1/(1 - x^{dir n}).
SymFuncContext principal_context(VarId x, int dir, int bound);

// Schur value from the h-determinant. s of the empty partition is 1.
FactoredRational schur_at(const SymFuncContext& ctx, const Partition& mu);

// Principal Schur value W_mu(x^dir) = s_mu at p_n = 1/(1 - x^{dir n}).
FactoredRational schur_w(const Partition& mu, VarId x, int dir, int bound);

// Hook-length closed form of the same value; the sign and monomial prefactor
// are pinned by the h-determinant route at small partitions.
FactoredRational w_hook_form(const Partition& mu, VarId x);

// Resolved-conifold amplitude: three independent computations.
TruncatedSeries conifold_series_schur(int q_cutoff);
TruncatedSeries conifold_series_hook(int q_cutoff);
TruncatedSeries conifold_series_pe(int q_cutoff);

// Diagonal Cauchy sum against its exponential closed form, order by order.
bool cauchy_same_partition_check(int cutoff);
// Transposed-partner variant. True for the orientation with the product of
// (1 + x_i y_j Q) in the numerator.
bool cauchy_dual_partition_check(int cutoff);

// Normalized one-parameter amplitude: hook-length sum with a mass parameter.
TruncatedSeries zhat_5d(int q_cutoff);
// Its compactified refinement: gradings Qrho, Q; the infinite tower is cut
// at the Qrho order.
TruncatedSeries zhat_6d(int q_cutoff, int rho_cutoff);

// String side of the rank-N identification as a series in the collected Q,
// with the sign-carrying framing weight already specialized: e_1 = -1 at
// rank two, e_{K+1} = 1 above rank two where K = floor((N+m-1)/2).
TruncatedSeries zhat_rank(int N, int m, int q_cutoff);
// The gauge side carrying the same specialization, for comparison.
TruncatedSeries zhat_rank_gauge_side(int N, int m, int q_cutoff);

}  // namespace eqgen

#endif
