#include "eqgen/variables.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace eqgen {

namespace {

struct Table {
  std::vector<std::string> names;
  std::unordered_map<std::string, VarId> ids;
  std::mutex mu;

  Table() {
    // Fixed registration order; it defines the normalization order on
    // exponent vectors, so do not reorder.
    const char* std_names[] = {"q", "y", "t1", "t2", "p", "Qm", "Qrho"};
    for (const char* n : std_names) add(n);
    for (int a = 1; a <= 8; ++a) add("e" + std::to_string(a));
    add("Q");
    add("QB");
    for (int i = 1; i <= 7; ++i) add("QF" + std::to_string(i));
  }

  VarId add(const std::string& n) {
    auto it = ids.find(n);
    if (it != ids.end()) return it->second;
    VarId id = static_cast<VarId>(names.size());
    names.push_back(n);
    ids.emplace(n, id);
    return id;
  }
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

VarId VariableRegistry::intern(const std::string& name) {
  Table& t = table();
  std::scoped_lock lock(t.mu);
  return t.add(name);
}

const std::string& VariableRegistry::name(VarId id) {
  Table& t = table();
  std::scoped_lock lock(t.mu);
  if (id >= t.names.size()) throw std::out_of_range("unknown variable id");
  return t.names[id];
}

std::optional<VarId> VariableRegistry::lookup(const std::string& name) {
  Table& t = table();
  std::scoped_lock lock(t.mu);
  auto it = t.ids.find(name);
  if (it == t.ids.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableRegistry::count() {
  Table& t = table();
  std::scoped_lock lock(t.mu);
  return t.names.size();
}

namespace vars {
VarId q() { return VariableRegistry::intern("q"); }
VarId y() { return VariableRegistry::intern("y"); }
VarId t1() { return VariableRegistry::intern("t1"); }
VarId t2() { return VariableRegistry::intern("t2"); }
VarId p() { return VariableRegistry::intern("p"); }
VarId Qm() { return VariableRegistry::intern("Qm"); }
VarId Qrho() { return VariableRegistry::intern("Qrho"); }
VarId e(int alpha) {
  if (alpha < 1 || alpha > 8) throw std::out_of_range("framing index out of range");
  return VariableRegistry::intern("e" + std::to_string(alpha));
}
VarId Q() { return VariableRegistry::intern("Q"); }
VarId QB() { return VariableRegistry::intern("QB"); }
VarId QF(int i) {
  if (i < 1 || i > 7) throw std::out_of_range("fiber index out of range");
  return VariableRegistry::intern("QF" + std::to_string(i));
}
}  // namespace vars

}  // namespace eqgen
