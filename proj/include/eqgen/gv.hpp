#ifndef EQGEN_GV_HPP
#define EQGEN_GV_HPP

#include <array>
#include <string>

#include "eqgen/series.hpp"

namespace eqgen {

// The per-class data violates the integrality structure: leftover
// denominators, a non-palindromic profile, or a non-integer multiplicity.
struct GvStructureError : std::domain_error {
  using std::domain_error::domain_error;
};

// Finite box of curve classes over named lattice variables. Class points are
// integer vectors aligned with vars; the zero class is excluded.
struct ClassLattice {
  std::vector<VarId> vars;
  std::vector<std::pair<int, int>> bounds;  // inclusive per-variable range

  bool contains(const std::vector<int>& c) const;
};

using ClassPoint = std::vector<int>;

// Integer multiplicities per class and genus. The spin label of the
// character basis is g/2, so the same integer key serves both tables.
struct GVTable {
  std::map<ClassPoint, std::map<int, long long>> n;
  std::map<ClassPoint, std::map<int, long long>> N;

  bool operator==(const GVTable&) const = default;
};

// Per-class free energy: log of the partition function, sliced along the
// lattice variables. Grading variables use their exponent; coefficient
// variables are sliced out of the numerators.
std::map<ClassPoint, FactoredRational> free_energy_classes(const TruncatedSeries& Z,
                                                           const ClassLattice& lat);

// Removes the k-fold cover sum class by class. Only divisors inside the box
// are consulted; the box always contains them.
std::map<ClassPoint, FactoredRational> mobius_invert(
    const std::map<ClassPoint, FactoredRational>& F, const ClassLattice& lat);

// One class worth of invariants from its connected free energy: the product
// with w = (q^{1/2}-q^{-1/2})^2 must clear to a palindromic Laurent
// polynomial, whose w-basis and character-basis expansions give n and N.
// The global sign is anchored so the primitive resolved-conifold class
// carries n^0 = N^0 = +1.
std::pair<std::map<int, long long>, std::map<int, long long>> extract_invariants(
    const FactoredRational& G, VarId q);

GVTable extract_gv(const std::map<ClassPoint, FactoredRational>& G, VarId q);

// Basis change between the two integer bases and its inverse; exact and
// triangular, round trips are the identity.
std::map<int, long long> n_to_N(const std::map<int, long long>& n);
std::map<int, long long> N_to_n(const std::map<int, long long>& N);

// Free energy reconstructed through the multi-cover sum from an N-table,
// with the tower over repetition numbers resummed in closed form.
std::map<ClassPoint, FactoredRational> reconstruct_free_energy(const GVTable& t,
                                                               const ClassLattice& lat, VarId q);
// Same data exponentiated into a series graded by the lattice variables
// (which therefore need nonnegative bounds).
TruncatedSeries reconstruct_Z(const GVTable& t, const ClassLattice& lat, VarId q);

// Integer coefficient tables over keys (a, b, c); the folded form stores the
// spin doubled in the middle slot.
struct CoefficientTable {
  std::map<std::array<long, 3>, long long> t;

  void set(std::array<long, 3> key, long long v);
  long long at(std::array<long, 3> key) const;
  bool operator==(const CoefficientTable&) const = default;
};

// Coefficients of the quadruple infinite product defining the refined
// one-loop block, expanded to the given nome order.
CoefficientTable c_table(int p_cutoff);
// Folds the palindromic q-profile into characters of even weight; throws
// when the required symmetries fail. Unfold inverts it.
CoefficientTable fold_to_ctilde(const CoefficientTable& C);
CoefficientTable unfold_ctilde(const CoefficientTable& Ct);

// The multi-cover product built from a folded table, resummed exactly per
// class; gradings p and Q, coefficients in q and y.
TruncatedSeries product_from_ctilde(const CoefficientTable& Ct, int q_cutoff, int p_cutoff);

// Geometry drivers.
struct GVExtraction {
  ClassLattice lattice;
  GVTable table;
  std::map<ClassPoint, FactoredRational> connected;
  std::vector<std::string> notes;
};

GVExtraction conifold_gv(int max_degree);
// The mass-parameter class enters with a flipped sign; the note records it.
GVExtraction five_d_gv(int r_max, int s_max);
GVExtraction six_d_gv(int q_cutoff, int rho_cutoff, int qm_bound);
// Table predicted for the compactified geometry by folding the coefficient
// table through the character calculus.
GVTable six_d_prediction(const CoefficientTable& Ct, const ClassLattice& lat);

}  // namespace eqgen

#endif
