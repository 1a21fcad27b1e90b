#ifndef EQGEN_SERIALIZE_HPP
#define EQGEN_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "eqgen/gv.hpp"
#include "eqgen/partitions.hpp"
#include "eqgen/series.hpp"

namespace eqgen {

using Json = nlohmann::ordered_json;

// Partitions serialize as arrays of parts; the empty partition as [].
Json to_json(const Partition& mu);

// Monomials as variable -> doubled-exponent maps, rationals as "p/q" strings.
Json to_json(const Monomial& m);
Json to_json(const FactoredRational& f);

// {cutoffs, terms: [{grading, num: [[monomial, rational]...],
//  den: [[monomial, multiplicity]...]}]}. Denominator atoms with a
// coefficient other than 1 carry it as a third entry.
Json to_json(const TruncatedSeries& s);

Json to_json(const GVTable& t, const ClassLattice& lat);
std::string to_csv(const GVTable& t, const ClassLattice& lat);

Json to_json(const CoefficientTable& t);
std::string to_csv(const CoefficientTable& t, bool folded);

}  // namespace eqgen

#endif
