#include "eqgen/serialize.hpp"

#include <sstream>

namespace eqgen {

Json to_json(const Partition& mu) {
  Json arr = Json::array();
  for (int p : mu.parts()) arr.push_back(p);
  return arr;
}

Json to_json(const Monomial& m) {
  Json obj = Json::object();
  for (const auto& [v, e] : m.entries()) obj[VariableRegistry::name(v)] = e;
  return obj;
}

Json to_json(const FactoredRational& f) {
  Json num = Json::array();
  for (const auto& [m, c] : f.num().terms()) num.push_back(Json::array({to_json(m), rat_to_string(c)}));
  Json den = Json::array();
  for (const auto& [atom, mult] : f.den()) {
    Json entry = Json::array({to_json(atom.mono), mult});
    if (atom.coef != 1) entry.push_back(rat_to_string(atom.coef));
    den.push_back(entry);
  }
  return Json{{"num", num}, {"den", den}};
}

Json to_json(const TruncatedSeries& s) {
  Json cutoffs = Json::object();
  for (std::size_t i = 0; i < s.gvars().size(); ++i)
    cutoffs[VariableRegistry::name(s.gvars()[i])] = s.cutoffs()[i];
  Json terms = Json::array();
  for (const auto& [e, coef] : s.terms()) {
    Json grading = Json::object();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) grading[VariableRegistry::name(s.gvars()[i])] = e[i];
    Json entry = to_json(coef);
    entry["grading"] = std::move(grading);
    // keep the declared order: grading first
    Json fixed = Json{{"grading", entry["grading"]}, {"num", entry["num"]}, {"den", entry["den"]}};
    terms.push_back(std::move(fixed));
  }
  return Json{{"cutoffs", cutoffs}, {"terms", terms}};
}

Json to_json(const GVTable& t, const ClassLattice& lat) {
  Json arr = Json::array();
  // union of class/genus keys over both tables
  std::map<ClassPoint, std::map<int, std::pair<long long, long long>>> merged;
  for (const auto& [cls, genera] : t.n)
    for (auto [g, v] : genera) merged[cls][g].first = v;
  for (const auto& [cls, genera] : t.N)
    for (auto [g, v] : genera) merged[cls][g].second = v;
  for (const auto& [cls, genera] : merged) {
    for (auto [g, pair] : genera) {
      Json c = Json::object();
      for (std::size_t i = 0; i < lat.vars.size(); ++i)
        c[VariableRegistry::name(lat.vars[i])] = cls[i];
      arr.push_back(Json{{"class", c}, {"g", g}, {"n", pair.first}, {"N", pair.second}});
    }
  }
  return arr;
}

std::string to_csv(const GVTable& t, const ClassLattice& lat) {
  std::ostringstream out;
  for (std::size_t i = 0; i < lat.vars.size(); ++i) out << VariableRegistry::name(lat.vars[i]) << ",";
  out << "g,n,N\n";
  std::map<ClassPoint, std::map<int, std::pair<long long, long long>>> merged;
  for (const auto& [cls, genera] : t.n)
    for (auto [g, v] : genera) merged[cls][g].first = v;
  for (const auto& [cls, genera] : t.N)
    for (auto [g, v] : genera) merged[cls][g].second = v;
  for (const auto& [cls, genera] : merged) {
    for (auto [g, pair] : genera) {
      for (int c : cls) out << c << ",";
      out << g << "," << pair.first << "," << pair.second << "\n";
    }
  }
  return out.str();
}

Json to_json(const CoefficientTable& t) {
  Json arr = Json::array();
  for (const auto& [k, v] : t.t) arr.push_back(Json::array({k[0], k[1], k[2], v}));
  return arr;
}

std::string to_csv(const CoefficientTable& t, bool folded) {
  std::ostringstream out;
  out << (folded ? "a,two_j,c,value" : "a,b,c,value") << "\n";
  for (const auto& [k, v] : t.t) out << k[0] << "," << k[1] << "," << k[2] << "," << v << "\n";
  return out.str();
}

}  // namespace eqgen
