#ifndef EQGEN_VERIFY_HPP
#define EQGEN_VERIFY_HPP

#include <string>
#include <vector>

namespace eqgen {

// One named verification suite: every line is an exact coefficient identity
// checked at the configured orders. Suites never weaken a failed identity;
// resolved orientation conventions are reported alongside.
struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what);
  void note(const std::string& what);
};

struct VerifyConfig {
  int q_order = -1;    // -1 = suite default
  int p_order = -1;
  int box_r = -1;      // class box for table suites
  int box_s = -1;
  unsigned workers = 1;
};

const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace eqgen

#endif
