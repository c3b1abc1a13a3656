// stlie: exact construction of the matrix Lie superalgebras sl(m,n,R) over
// finite-dimensional coefficient algebras, their explicit 2-cocycle central
// extensions in the (3,1) and (2,2) cases, and graded second homology by
// exact linear algebra.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stlie/algebra_io.hpp"
#include "stlie/commands.hpp"
#include "stlie/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact H2 and central extensions of sl(m,n,R)"};
  app.set_version_flag("--version", std::string(stlie::kVersion));
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "list built-in coefficient algebras");

  std::string builtin, spec_path;
  std::size_t m = 0, n = 0;
  std::size_t budget = 70;
  auto add_algebra_opts = [&](CLI::App* cmd) {
    cmd->add_option("--builtin", builtin, "built-in algebra name (see catalog)");
    cmd->add_option("--spec", spec_path, "algebra spec file (JSON)");
  };

  auto* hom2 = app.add_subcommand("hom2", "graded H2 of sl(m,n,R)");
  add_algebra_opts(hom2);
  hom2->add_option("--m", m, "block size m")->required();
  hom2->add_option("--n", n, "block size n")->required();
  hom2->add_option("--budget", budget, "max dim of the algebra fed to homology");

  std::string kase;
  auto* cocycle = app.add_subcommand("cocycle-check",
                                     "build the central extension and verify the "
                                     "cocycle, presentation and T# identities");
  add_algebra_opts(cocycle);
  cocycle->add_option("--case", kase, "extension case: 3,1 or 2,2")->required();

  std::optional<std::string> out_path;
  std::string out_path_raw;
  std::vector<std::string> only;
  auto* repro = app.add_subcommand("reproduce",
                                   "run the full verification suite over the catalog "
                                   "and emit the H2 table and a JSON report");
  repro->add_option("--out", out_path_raw, "write the JSON report here");
  repro->add_option("--budget", budget, "max dim of any algebra fed to homology");
  repro->add_option("--only", only, "restrict to these catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? stlie::kExitOk : stlie::kExitUsage;
  }

  try {
    if (cat->parsed()) return stlie::cmd_catalog(std::cout);
    if (hom2->parsed()) {
      stlie::AnyAlgebra a = stlie::resolve_algebra(builtin, spec_path);
      std::string name = builtin.empty() ? spec_path : builtin;
      return stlie::cmd_hom2(a, name, m, n, budget, std::cout);
    }
    if (cocycle->parsed()) {
      stlie::AnyAlgebra a = stlie::resolve_algebra(builtin, spec_path);
      std::string name = builtin.empty() ? spec_path : builtin;
      return stlie::cmd_cocycle_check(a, name, kase, std::cout);
    }
    if (repro->parsed()) {
      if (!out_path_raw.empty()) out_path = out_path_raw;
      stlie::ReproduceOptions opts;
      opts.budget = budget;
      opts.only = only;
      return stlie::cmd_reproduce(opts, out_path, std::cout);
    }
  } catch (const stlie::CocycleViolationError& e) {
    std::cerr << "cocycle violation: " << e.what() << '\n';
    return stlie::kExitMathFail;
  } catch (const stlie::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return stlie::kExitUsage;
  }
  return stlie::kExitUsage;
}
