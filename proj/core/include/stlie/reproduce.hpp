#pragma once

// Full reproduction run over the built-in catalog: exhaustive axiom sweeps,
// bracket-identity suites, cocycle and presentation checks, and the graded
// H2 dimension identities, rendered as a JSON report plus a human table.

#include <cstddef>
#include <string>
#include <vector>

namespace stlie {

struct ReproduceOptions {
  std::size_t budget = 70;         // max dim of any algebra fed to homology
  std::vector<std::string> only;   // restrict to these catalog names; empty = all
};

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::size_t checks = 0;
  std::vector<std::string> notes;  // failures and recorded skips
};

struct ReproduceResult {
  bool all_pass = false;
  std::vector<CriterionOutcome> criteria;
  std::string human_table;

  // rendered report; identical across runs when timings are excluded
  std::string json(bool with_timings) const {
    return with_timings ? json_full_ : json_stable_;
  }

  std::string json_full_;
  std::string json_stable_;
};

ReproduceResult run_reproduce(const ReproduceOptions& opts);

}  // namespace stlie
