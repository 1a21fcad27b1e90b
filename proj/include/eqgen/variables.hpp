#ifndef EQGEN_VARIABLES_HPP
#define EQGEN_VARIABLES_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace eqgen {

using VarId = std::uint32_t;

// Process-wide interning table for formal variables. The id order (= first
// registration order) doubles as the total order on variables used when
// normalizing denominator binomials, so it is fixed once at startup: the
// standard names below are interned eagerly in a deterministic order.
//
// Roles (grading vs coefficient variable) and per-variable cutoffs are not
// properties of a name; they are declared by each TruncatedSeries.
class VariableRegistry {
 public:
  static VarId intern(const std::string& name);
  static const std::string& name(VarId id);
  static std::optional<VarId> lookup(const std::string& name);
  static std::size_t count();
};

// Standard variable set. q, y: character variables; t1, t2: torus weights;
// p: elliptic nome; Qm, Qrho: extra Kaehler parameters; e1..e8: framing
// weights; Q: instanton-counting variable; QB, QF1..QF7: base/fiber classes.
namespace vars {
VarId q();
VarId y();
VarId t1();
VarId t2();
VarId p();
VarId Qm();
VarId Qrho();
VarId e(int alpha);  // 1-based, alpha <= 8
VarId Q();
VarId QB();
VarId QF(int i);  // 1-based, i <= 7
}  // namespace vars

}  // namespace eqgen

#endif
