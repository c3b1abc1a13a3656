#include <doctest.h>

#include <fstream>
#include <sstream>

#include "stlie/algebra_io.hpp"
#include "stlie/commands.hpp"

using namespace stlie;

namespace {

const char* kDualF3Spec = R"({
  "field": {"kind": "Fp", "p": 3},
  "dim": 2,
  "basis": ["1", "x"],
  "unit": ["1", "0"],
  "mult": [
    [["1", "0"], ["0", "1"]],
    [["0", "1"], ["0", "0"]]
  ]
})";

}  // namespace

TEST_CASE("algebra spec files parse and validate") {
  AnyAlgebra a = parse_algebra_json(kDualF3Spec);
  CHECK(algebra_dim(a) == 2);
  CHECK(algebra_field(a) == FieldSpec::prime_field(3));
  const auto& alg = std::get<KAlgebra<PrimeField>>(a);
  CHECK(alg.is_zero_vec(alg.mul(alg.basis_element(1), alg.basis_element(1))));
}

TEST_CASE("rational scalars accept fraction strings") {
  const char* spec = R"({
    "field": {"kind": "Q"},
    "dim": 1,
    "basis": ["1"],
    "unit": ["2/2"],
    "mult": [[["4/4"]]]
  })";
  AnyAlgebra a = parse_algebra_json(spec);
  CHECK(algebra_field(a) == FieldSpec::rationals());
}

TEST_CASE("parse errors carry the line number") {
  const char* broken = "{\n  \"field\": {\"kind\": \"Q\"},\n  \"dim\": oops\n}";
  try {
    parse_algebra_json(broken, "bad.json");
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(std::string(e.what()).find("bad.json:3") != std::string::npos);
  }
}

TEST_CASE("invalid algebras are rejected before any computation") {
  // non-associative mult: x*x = y, x*y = 1, y*x = y*y = 0
  const char* nonassoc = R"({
    "field": {"kind": "Fp", "p": 2},
    "dim": 3,
    "basis": ["1", "x", "y"],
    "unit": ["1", "0", "0"],
    "mult": [
      [["1","0","0"], ["0","1","0"], ["0","0","1"]],
      [["0","1","0"], ["0","0","1"], ["1","0","0"]],
      [["0","0","1"], ["0","0","0"], ["0","0","0"]]
    ]
  })";
  CHECK_THROWS_AS(parse_algebra_json(nonassoc), InvalidAlgebraError);

  // unit coordinates that are not a basis vector
  const char* badunit = R"({
    "field": {"kind": "Q"},
    "dim": 2,
    "basis": ["1", "x"],
    "unit": ["1", "1"],
    "mult": [
      [["1","0"], ["0","1"]],
      [["0","1"], ["0","0"]]
    ]
  })";
  CHECK_THROWS_AS(parse_algebra_json(badunit), InvalidAlgebraError);
}

TEST_CASE("builtin algebras survive a JSON round trip") {
  for (const char* name : {"F2", "Q", "weyl-F2"}) {
    const CatalogEntry* e = find_builtin(name);
    REQUIRE(e != nullptr);
    AnyAlgebra back = parse_algebra_json(algebra_to_json(e->algebra));
    CHECK(algebra_dim(back) == algebra_dim(e->algebra));
    CHECK(algebra_field(back) == algebra_field(e->algebra));
  }
}

TEST_CASE("resolve_algebra rejects unknown builtins and double sources") {
  CHECK_THROWS_AS(resolve_algebra("no-such-algebra", ""), Error);
  CHECK_THROWS_AS(resolve_algebra("F2", "also/a/path.json"), Error);
  CHECK_THROWS_AS(resolve_algebra("", ""), Error);
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/path.json"), SpecParseError);
}

TEST_CASE("cmd_catalog lists the built-in rows") {
  std::ostringstream out;
  CHECK(cmd_catalog(out) == kExitOk);
  std::string s = out.str();
  CHECK(s.find("F2") != std::string::npos);
  CHECK(s.find("weyl-F2") != std::string::npos);
  CHECK(s.find("mat2-F2") != std::string::npos);
}

TEST_CASE("cmd_hom2 prints the graded dimensions") {
  std::ostringstream out;
  const CatalogEntry* f2 = find_builtin("F2");
  CHECK(cmd_hom2(f2->algebra, "F2", 3, 1, 70, out) == kExitOk);
  CHECK(out.str().find("even 0, odd 6") != std::string::npos);

  std::ostringstream out2;
  const CatalogEntry* q = find_builtin("Q");
  CHECK(cmd_hom2(q->algebra, "Q", 2, 2, 70, out2) == kExitOk);
  CHECK(out2.str().find("even 2, odd 0") != std::string::npos);

  std::ostringstream out3;
  CHECK(cmd_hom2(f2->algebra, "F2", 2, 1, 70, out3) == kExitOk);
  CHECK(out3.str().find("even 0, odd 0") != std::string::npos);

  // budget violations surface as resource errors
  std::ostringstream out4;
  const CatalogEntry* m = find_builtin("mat2-F2");
  CHECK_THROWS_AS(cmd_hom2(m->algebra, "mat2-F2", 3, 1, 10, out4), ResourceError);
}

TEST_CASE("cmd_cocycle_check verifies the relation families") {
  std::ostringstream out;
  const CatalogEntry* d = find_builtin("dual-F2");
  CHECK(cmd_cocycle_check(d->algebra, "dual-F2", "3,1", out) == kExitOk);
  std::string s = out.str();
  CHECK(s.find("cocycle / axioms:   pass") != std::string::npos);
  CHECK(s.find("presentation:       pass") != std::string::npos);
  CHECK(s.find("T# identities:      pass") != std::string::npos);

  std::ostringstream out2;
  const CatalogEntry* q = find_builtin("Q");
  CHECK(cmd_cocycle_check(q->algebra, "Q", "2,2", out2) == kExitOk);

  CHECK_THROWS_AS(cmd_cocycle_check(q->algebra, "Q", "4,0", out2), Error);
}

TEST_CASE("reproduce subset run is deterministic and self-consistent") {
  ReproduceOptions opts;
  opts.only = {"F2", "Q"};
  ReproduceResult r1 = run_reproduce(opts);
  CHECK(r1.all_pass);
  REQUIRE(r1.criteria.size() == 7);
  for (const CriterionOutcome& c : r1.criteria) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }

  ReproduceResult r2 = run_reproduce(opts);
  CHECK(r1.json(false) == r2.json(false));
  CHECK(r1.json(true).find("timings") != std::string::npos);
  CHECK(r1.json(false).find("timings") == std::string::npos);
  CHECK(r1.human_table.find("F2") != std::string::npos);
}

TEST_CASE("reproduce records skips under a tight budget") {
  ReproduceOptions opts;
  opts.budget = 10;
  opts.only = {"F2"};
  ReproduceResult r = run_reproduce(opts);
  // sl(2,1,F2) fits in the budget, larger shapes are skipped but recorded
  bool has_skip_note = false;
  for (const CriterionOutcome& c : r.criteria)
    for (const std::string& note : c.notes)
      if (note.find("skipped") != std::string::npos) has_skip_note = true;
  CHECK(has_skip_note);
  CHECK(r.json(false).find("size budget") != std::string::npos);
}

TEST_CASE("cmd_reproduce writes the report file") {
  std::ostringstream out;
  ReproduceOptions opts;
  opts.only = {"F2"};
  std::string path = "/tmp/stlie_test_report.json";
  CHECK(cmd_reproduce(opts, path, out) == kExitOk);
  CHECK(out.str().find("verdict: pass") != std::string::npos);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str().find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(buf.str().find("\"timings\"") != std::string::npos);
}
