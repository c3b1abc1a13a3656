// Acceptance suite: drives the full verification run over the built-in
// catalog twice (the second pass feeds the determinism criterion) and prints
// one pass/fail line per criterion.  Exit status 0 iff everything passed.
//
// Criteria, all exact integer identities:
//   1  superalgebra axioms for gl and sl across the catalog and shapes
//   2  bracket identity suite (T/t relations) on sl
//   3  extensions build for both cases; corrupted sign tables are rejected
//   4  presentation relations and T# identities
//   5  graded H2 dimension identities, including the pinned spot values
//   6  each extension trivializes exactly its kernel classes in H2
//   7  chain consistency: d2 annihilates B2; B2 rank stable under reordering
//   8  two runs emit byte-identical reports (timings excluded)

#include <cstdio>
#include <string>

#include "stlie/reproduce.hpp"

int main() {
  stlie::ReproduceOptions opts;
  stlie::ReproduceResult first = stlie::run_reproduce(opts);
  stlie::ReproduceResult second = stlie::run_reproduce(opts);

  bool all_pass = true;
  for (const stlie::CriterionOutcome& c : first.criteria) {
    std::printf("[%d] %s: %s (%zu checks)\n", c.id, c.name.c_str(),
                c.pass ? "PASS" : "FAIL", c.checks);
    for (const std::string& note : c.notes) std::printf("      %s\n", note.c_str());
    all_pass = all_pass && c.pass;
  }

  bool deterministic = first.json(false) == second.json(false);
  std::printf("[8] byte-identical reports across runs (timings excluded): %s\n",
              deterministic ? "PASS" : "FAIL");
  all_pass = all_pass && deterministic;

  std::printf("%s\n", first.human_table.c_str());
  std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
