// Acceptance gate: one line per criterion, each an exact identity at the
// contract orders. Runs the same named suites the CLI exposes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "eqgen/verify.hpp"

using namespace eqgen;

namespace {

bool run(const char* criterion, const std::string& suite, VerifyConfig cfg = {}) {
  SuiteResult r = run_suite(suite, cfg);
  std::printf("[%s] criterion %s (%s)\n", r.passed ? "PASS" : "FAIL", criterion, suite.c_str());
  if (!r.passed)
    for (const auto& line : r.lines) std::printf("%s\n", line.c_str());
  return r.passed;
}

}  // namespace

TEST_CASE("acceptance") {
  VerifyConfig defaults;
  defaults.workers = 2;

  CHECK(run("1: Schur sum = localization = product, order 6", "thm6.1", defaults));
  CHECK(run("2: weight-zero genus four ways, order 6", "eq18", defaults));
  CHECK(run("3: chi_y moduli = symmetric products, order 5", "eq22", defaults));
  CHECK(run("4: resolved infinite products, order 5", "products", defaults));
  CHECK(run("5: two-variable tower identity, orders (3,2)", "dmvv26", defaults));
  CHECK(run("6: hook products = stabilized ratio products", "lemma4.4", defaults));
  CHECK(run("7: part-offset form = twisted index, ranks 1-2", "lemma4.3", defaults));
  CHECK(run("8a: rank-two identification, twists 0-2", "thm7.1", defaults));
  CHECK(run("8b: rank-three identification, twist 1", "thm7.2", defaults));
  CHECK(run("9: integer invariant tables", "gvtables", defaults));
  CHECK(run("10: refined block table and products", "c-table", defaults));
  CHECK(run("11a: generic table identity, 100 random tables", "eq5-generic", defaults));
  CHECK(run("11b: structural property suites", "structural", defaults));
}
