#ifndef EQGEN_INSTANTON_HPP
#define EQGEN_INSTANTON_HPP

#include <stdexcept>
#include <utility>

#include "eqgen/partitions.hpp"
#include "eqgen/series.hpp"

namespace eqgen {

// The doubly-infinite ratio product failed to stabilize at the chosen
// truncation; the bound was too small for this tuple.
struct StabilizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A torus fixed point of the rank-N framed moduli space: an N-tuple of
// partitions of total size k (the instanton number).
struct FixedPoint {
  MultiPartition mu;
  int rank() const { return mu.rank(); }
  int instanton_number() const { return mu.total_size(); }
};

using WeightList = std::vector<Monomial>;

enum class GenusFlavor { Chi0, ChiY, Elliptic };

// Tangent weights at a fixed point, as monomials in t1, t2, e_alpha.
// Exactly 2*N*k of them, closed under w -> t1 t2 / w.
WeightList tangent_weights(const FixedPoint& fp);

// Weights of the tautological bundle (k of them) and the weight of the dual
// determinant line, which is the inverse of their product.
std::pair<WeightList, Monomial> v_bundle_weights(const FixedPoint& fp);

// Generating series of equivariant genera over all instanton numbers up to
// the cutoff. chi0/chiy are series in Q; the two-variable genus is a series
// in p and Q, with the infinite factor product truncated at p_cutoff + 1.
TruncatedSeries genus_series(int N, GenusFlavor flavor, int q_cutoff, int p_cutoff = 0);

// Index series of the half-canonical twist with m powers of the dual
// determinant line (m < 0 twists by the determinant line itself). At m = 0
// this differs from chi0 by (t1 t2)^{Nk/2} per instanton number.
TruncatedSeries twisted_index_series(int N, int m, int q_cutoff);

// The same series built from part offsets mu_i - i through the stabilized
// ratio-product form, in the variables q, e_alpha (t1 = q, t2 = q^{-1}).
// The per-instanton constant is 1/2^{2N}; with the convention used here it
// cancels against the doubled hyperbolic factors.
TruncatedSeries sinh_form_series(int N, int m, int q_cutoff);

// The two-variable genus factor contributed by a single weight w: the
// rational n=1 part stays factored, positive nome powers are expanded up to
// the cutoff. Series in p over coefficients in w's variables and y.
TruncatedSeries elliptic_weight_factor(const Monomial& w, int p_cutoff);

// Net exponent multiplicities of the stabilized ratio product for an ordered
// pair of partitions: offset v -> multiplicity of the factor at offset v,
// where positive multiplicities sit in the numerator. Truncation at L and
// L+1 must agree on the stabilization window or StabilizationError is
// thrown. The counts always sum to -(|a| + |b|).
std::map<long, long> stable_pair_counts(const Partition& a, const Partition& b, int L);

// Truncation bound used for a tuple, large enough for the window check.
int stabilization_bound(const MultiPartition& mu);

// Multiplies in the stabilized ratio product of the ordered pair
// (alpha, gamma) of mu's components, in the variables q, e_alpha. Each
// offset v carries the factor ((E^{1/2}-E^{-1/2})/2)^{c(v)} with
// E = e_alpha^{-1} e_gamma q^{-v}.
void mul_stable_pair_product(FactoredRational& f, const MultiPartition& mu, int alpha, int gamma,
                             int L);

// The two sides of the hook-product identity for one tuple, as exact
// rational functions of q and e_alpha: a finite product of reciprocal
// hyperbolic factors on the left, the stabilized ratio product on the right.
FactoredRational konishi_hook_side(const MultiPartition& mu);
FactoredRational konishi_product_side(const MultiPartition& mu);

}  // namespace eqgen

#endif
