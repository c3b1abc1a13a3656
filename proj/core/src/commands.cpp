#include "stlie/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "stlie/cocycle.hpp"
#include "stlie/homology.hpp"

namespace stlie {

int cmd_catalog(std::ostream& out) {
  out << std::left << std::setw(12) << "name" << std::setw(8) << "field" << std::setw(5)
      << "dim" << std::setw(8) << "dim R2" << std::setw(8) << "dim R0"
      << "description" << '\n';
  for (const CatalogEntry& e : builtin_catalog()) {
    auto [r2, r0] = std::visit(
        [](const auto& alg) {
          return std::pair<std::size_t, std::size_t>{alg.ideal_Im(2).quotient_dim,
                                                     alg.ideal_Im(0).quotient_dim};
        },
        e.algebra);
    out << std::left << std::setw(12) << e.name << std::setw(8)
        << algebra_field(e.algebra).name() << std::setw(5) << algebra_dim(e.algebra)
        << std::setw(8) << r2 << std::setw(8) << r0 << e.description << '\n';
  }
  return kExitOk;
}

int cmd_hom2(const AnyAlgebra& algebra, const std::string& name, std::size_t m, std::size_t n,
             std::size_t budget, std::ostream& out) {
  return std::visit(
      [&](const auto& alg) {
        using F = std::decay_t<decltype(alg.field())>;
        SlAlgebra<F> sl = build_sl(m, n, alg);
        if (sl.dim() > budget) {
          throw ResourceError("dim sl(" + std::to_string(m) + "," + std::to_string(n) +
                              "," + name + ") = " + std::to_string(sl.dim()) +
                              " exceeds size budget " + std::to_string(budget));
        }
        if (!is_perfect(sl.lie)) {
          out << "warning: algebra is not perfect; H2 computed anyway\n";
        }
        GradedDims h2 = h2_graded(sl.lie);
        out << "h2(sl(" << m << "," << n << "," << name << ")) = " << h2.str() << '\n';
        return kExitOk;
      },
      algebra);
}

int cmd_cocycle_check(const AnyAlgebra& algebra, const std::string& name,
                      const std::string& kase, std::ostream& out) {
  ExtCase c;
  if (kase == "3,1") c = ExtCase::rank31;
  else if (kase == "2,2") c = ExtCase::rank22;
  else throw Error("unknown case '" + kase + "', expected 3,1 or 2,2");

  return std::visit(
      [&](const auto& alg) {
        using F = std::decay_t<decltype(alg.field())>;
        ExtensionAlgebra<F> ext = build_extension(c, alg);
        out << "extension built for case (" << kase << ") over " << name << ": kernel dim "
            << ext.kernel_dim() << ", total dim " << ext.total.dim() << '\n';
        CheckReport ax = verify_superaxioms(ext.total);
        out << "  cocycle / axioms:   " << (ax.passed() ? "pass" : "FAIL") << " ("
            << ax.summary() << ")\n";
        CheckReport pres = verify_presentation(ext);
        out << "  presentation:       " << (pres.passed() ? "pass" : "FAIL") << " ("
            << pres.summary() << ")\n";
        CheckReport ts = verify_tsharp_identities(ext);
        out << "  T# identities:      " << (ts.passed() ? "pass" : "FAIL") << " ("
            << ts.summary() << ")\n";
        bool ok = ax.passed() && pres.passed() && ts.passed();
        return ok ? kExitOk : kExitMathFail;
      },
      algebra);
}

int cmd_reproduce(const ReproduceOptions& opts, const std::optional<std::string>& out_path,
                  std::ostream& out) {
  ReproduceResult res = run_reproduce(opts);
  out << res.human_table << '\n';
  for (const CriterionOutcome& c : res.criteria) {
    out << "[" << c.id << "] " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " ("
        << c.checks << " checks)\n";
    for (const std::string& note : c.notes) out << "      " << note << '\n';
  }
  out << "verdict: " << (res.all_pass ? "pass" : "fail") << '\n';
  if (out_path) {
    std::ofstream f(*out_path);
    if (!f) throw Error("cannot write report to '" + *out_path + "'");
    f << res.json(true);
    out << "report written to " << *out_path << '\n';
  }
  return res.all_pass ? kExitOk : kExitMathFail;
}

}  // namespace stlie
