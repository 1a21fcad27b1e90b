// Command-line frontend: verification suites, genus series, invariant tables.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "eqgen/gv.hpp"
#include "eqgen/schur.hpp"
#include "eqgen/serialize.hpp"
#include "eqgen/symprod.hpp"
#include "eqgen/verify.hpp"

using namespace eqgen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& payload, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(path);
  out << payload << "\n";
}

int run_verify(const std::string& suite, bool all, const VerifyConfig& cfg) {
  std::vector<std::string> to_run;
  if (all) {
    to_run = suite_names();
  } else {
    if (!has_suite(suite)) {
      std::cerr << "unknown suite '" << suite << "'; available:";
      for (const auto& n : suite_names()) std::cerr << " " << n;
      std::cerr << "\n";
      return kExitUsage;
    }
    to_run.push_back(suite);
  }
  bool ok = true;
  for (const auto& name : to_run) {
    SuiteResult r = run_suite(name, cfg);
    ok = ok && r.passed;
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "\n";
    for (const auto& line : r.lines) std::cout << line << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

GenusFlavor parse_flavor(const std::string& s) {
  if (s == "chi0") return GenusFlavor::Chi0;
  if (s == "chiy") return GenusFlavor::ChiY;
  if (s == "elliptic") return GenusFlavor::Elliptic;
  throw CLI::ValidationError("flavor must be chi0, chiy or elliptic");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant genus and curve-counting engine"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  bool all = false;
  VerifyConfig cfg;
  int workers = 1;
  verify->add_option("--suite", suite, "suite name");
  verify->add_flag("--all", all, "run every suite");
  verify->add_option("--q-order", cfg.q_order, "counting-variable order");
  verify->add_option("--p-order", cfg.p_order, "nome order");
  std::string box;
  verify->add_option("--box", box, "class box r,s for table suites");
  verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  // genus
  auto* genus = app.add_subcommand("genus", "equivariant genus generating series");
  std::string space = "hilbert", flavor = "chi0", out_path, format = "json";
  int rank = 1, q_order = 3, p_order = 1;
  int gworkers = 1;
  genus->add_option("--space", space, "moduli | hilbert | symprod");
  genus->add_option("--flavor", flavor, "chi0 | chiy | elliptic");
  genus->add_option("--rank", rank, "sheaf rank for the moduli space");
  genus->add_option("--q-order", q_order, "counting-variable order");
  genus->add_option("--p-order", p_order, "nome order (elliptic only)");
  genus->add_option("--out", out_path, "output path (default stdout)");
  genus->add_option("--format", format, "json");
  genus->add_option("--workers", gworkers, "worker threads")->check(CLI::PositiveNumber);

  // gv
  auto* gv = app.add_subcommand("gv", "integer curve-counting tables");
  std::string geometry = "conifold", gout, gformat = "json";
  int degree = 6, gq = 3, gp = 2, twist = 0;
  std::string gbox = "4,4";
  gv->add_option("--geometry", geometry, "conifold | 5d | 6d");
  gv->add_option("--degree", degree, "maximal degree (conifold)");
  gv->add_option("--box", gbox, "class box r,s (5d)");
  gv->add_option("--q-order", gq, "counting order (6d)");
  gv->add_option("--p-order", gp, "tower order (6d)");
  gv->add_option("--twist", twist, "unused; reserved");
  gv->add_option("--out", gout, "output path prefix (default stdout)");
  gv->add_option("--format", gformat, "json | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (!all && suite.empty()) {
        std::cerr << "verify needs --suite <name> or --all\n";
        return kExitUsage;
      }
      if (!box.empty()) {
        auto comma = box.find(',');
        if (comma == std::string::npos) {
          std::cerr << "--box wants r,s\n";
          return kExitUsage;
        }
        cfg.box_r = std::stoi(box.substr(0, comma));
        cfg.box_s = std::stoi(box.substr(comma + 1));
      }
      cfg.workers = static_cast<unsigned>(workers);
      return run_verify(suite, all, cfg);
    }

    if (genus->parsed()) {
      GenusFlavor fl = parse_flavor(flavor);
      if (q_order < 0 || p_order < 0 || rank < 1) {
        std::cerr << "orders must be nonnegative, rank positive\n";
        return kExitUsage;
      }
      TruncatedSeries s = [&] {
        if (space == "symprod")
          return sym_series(fl, q_order, fl == GenusFlavor::Elliptic ? p_order : 0);
        if (space == "hilbert" || space == "moduli") {
          int N = space == "hilbert" ? 1 : rank;
          return genus_series(N, fl, q_order, fl == GenusFlavor::Elliptic ? p_order : 0);
        }
        throw CLI::ValidationError("space must be moduli, hilbert or symprod");
      }();
      emit(to_json(s).dump(2), out_path);
      return kExitOk;
    }

    if (gv->parsed()) {
      GVExtraction ex;
      if (geometry == "conifold") {
        ex = conifold_gv(degree);
      } else if (geometry == "5d") {
        auto comma = gbox.find(',');
        if (comma == std::string::npos) {
          std::cerr << "--box wants r,s\n";
          return kExitUsage;
        }
        ex = five_d_gv(std::stoi(gbox.substr(0, comma)), std::stoi(gbox.substr(comma + 1)));
      } else if (geometry == "6d") {
        ex = six_d_gv(gq, gp, gq + 1);
      } else {
        std::cerr << "geometry must be conifold, 5d or 6d\n";
        return kExitUsage;
      }
      if (gformat == "csv") {
        emit(to_csv(ex.table, ex.lattice), gout);
      } else {
        Json meta = Json::object();
        meta["notes"] = ex.notes;
        Json payload{{"table", to_json(ex.table, ex.lattice)}, {"metadata", meta}};
        emit(payload.dump(2), gout);
      }
      return kExitOk;
    }
  } catch (const GvStructureError& e) {
    std::cerr << "integrality failure: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
