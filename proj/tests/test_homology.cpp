#include <doctest.h>

#include "stlie/catalog.hpp"
#include "stlie/cocycle.hpp"
#include "stlie/homology.hpp"

using namespace stlie;

namespace {

const KAlgebra<PrimeField>& fp_entry(const char* name) {
  return std::get<KAlgebra<PrimeField>>(find_builtin(name)->algebra);
}
const KAlgebra<RationalField>& q_entry(const char* name) {
  return std::get<KAlgebra<RationalField>>(find_builtin(name)->algebra);
}

LieSuperAlgebra<RationalField> heisenberg3() {
  RationalField Q;
  std::vector<SparseVec<RationalField>> rows(9);
  rows[0 * 3 + 1] = {{2, Q.one()}};
  rows[1 * 3 + 0] = {{2, Q.from_int(-1)}};
  return LieSuperAlgebra<RationalField>(Q, {Parity::even, Parity::even, Parity::even},
                                        {"p", "q", "z"}, std::move(rows));
}

template <class F>
LieSuperAlgebra<F> abelian(const F& K, std::vector<Parity> par) {
  std::size_t d = par.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("a" + std::to_string(i));
  return LieSuperAlgebra<F>(K, std::move(par), std::move(labels),
                            std::vector<SparseVec<F>>(d * d));
}

// joint (non-blockwise) H2 total, used to cross-check the parity split
template <class F>
std::size_t h2_total_joint(const LieSuperAlgebra<F>& g) {
  Chain2Data<F> ch = chain2(g);
  std::size_t kernel = ch.basis.size() - rref(ch.d2).rank;
  RowAccumulator<F> acc(g.field(), ch.basis.size());
  for (const SparseVec<F>& row : ch.b2_gens) acc.add_sparse(row);
  return kernel - acc.rank();
}

}  // namespace

TEST_CASE("lambda2 enumeration") {
  RationalField Q;
  auto g = abelian(Q, {Parity::even, Parity::even, Parity::odd});
  auto L = lambda2(g);
  REQUIRE(L.size() == 4);
  CHECK(L.pairs == std::vector<std::pair<std::uint32_t, std::uint32_t>>{
                       {0, 1}, {0, 2}, {1, 2}, {2, 2}});
  CHECK(L.parity[0] == Parity::even);
  CHECK(L.parity[1] == Parity::odd);
  CHECK(L.parity[3] == Parity::even);

  auto even5 = abelian(Q, std::vector<Parity>(5, Parity::even));
  CHECK(lambda2(even5).size() == 10);  // C(5,2)

  auto odd4 = abelian(Q, std::vector<Parity>(4, Parity::odd));
  CHECK(lambda2(odd4).size() == 6 + 4);  // C(4,2) + diagonal classes
}

TEST_CASE("chain2 on degenerate and tiny algebras") {
  RationalField Q;
  auto ab = abelian(Q, std::vector<Parity>(3, Parity::even));
  auto ch = chain2(ab);
  CHECK(ch.b2_gens.empty());
  CHECK(rref(ch.d2).rank == 0);

  auto heis = heisenberg3();
  auto chh = chain2(heis);
  CHECK(rref(chh.d2).rank == 1);
  // Jacobi rows of the Heisenberg algebra all collapse to zero
  CHECK(chh.b2_gens.empty());
}

TEST_CASE("h2 of small even algebras") {
  RationalField Q;
  auto one = abelian(Q, {Parity::even});
  CHECK(h2_graded(one) == GradedDims{0, 0});  // Lambda^2 empty

  CHECK(h2_graded(heisenberg3()) == GradedDims{2, 0});
}

TEST_CASE("chain consistency on sl") {
  // chain2 asserts d2(J) = 0 for every generator; reaching h2 means it held
  auto sl = build_sl(2, 1, fp_entry("F2"));
  CHECK_NOTHROW(chain2(sl.lie));
}

TEST_CASE("h2 of sl reproduces the graded kernel table") {
  const auto& F2 = fp_entry("F2");
  CHECK(h2_of_sl(2, 1, F2) == GradedDims{0, 0});
  CHECK(h2_of_sl(3, 1, F2) == GradedDims{0, 6});
  CHECK(h2_of_sl(2, 2, F2) == GradedDims{6, 0});

  const auto& Q1 = q_entry("Q");
  CHECK(h2_of_sl(2, 2, Q1) == GradedDims{2, 0});
  CHECK(h2_of_sl(3, 1, Q1) == GradedDims{0, 0});
}

TEST_CASE("h2 budget enforcement") {
  CHECK_THROWS_AS(h2_of_sl(3, 1, fp_entry("mat2-F2"), 10), ResourceError);
  CHECK_THROWS_AS(h2_of_sl(1, 1, fp_entry("F2")), UnsupportedRankError);
}

TEST_CASE("parity split agrees with the joint computation") {
  for (const char* name : {"F2", "F3", "dual-F2"}) {
    auto sl = build_sl(2, 1, fp_entry(name));
    GradedDims split = h2_graded(sl.lie);
    CAPTURE(name);
    CHECK(split.even + split.odd == h2_total_joint(sl.lie));
  }
  auto sl31 = build_sl(3, 1, fp_entry("F2"));
  GradedDims split = h2_graded(sl31.lie);
  CHECK(split.even + split.odd == h2_total_joint(sl31.lie));
  auto slq = build_sl(2, 2, q_entry("Q"));
  GradedDims splitq = h2_graded(slq.lie);
  CHECK(splitq.even + splitq.odd == h2_total_joint(slq.lie));
}

TEST_CASE("B2 rank is stable under enlarging to all ordered triples") {
  auto check_algebra = [](const auto& g) {
    auto ch = chain2(g);
    using F = std::decay_t<decltype(g.field())>;
    RowAccumulator<F> sorted_acc(g.field(), ch.basis.size());
    for (const auto& row : ch.b2_gens) sorted_acc.add_sparse(row);
    RowAccumulator<F> all_acc(g.field(), ch.basis.size());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        for (std::size_t k = 0; k < g.dim(); ++k) {
          auto row = jacobi_row(g, ch.basis, i, j, k);
          if (!row.empty()) all_acc.add_sparse(row);
        }
    CHECK(sorted_acc.rank() == all_acc.rank());
  };
  check_algebra(build_sl(2, 1, fp_entry("F2")).lie);   // dim 8, char 2
  check_algebra(build_sl(2, 1, fp_entry("F3")).lie);   // dim 8, char 3
  check_algebra(build_sl(2, 1, q_entry("Q")).lie);     // dim 8, char 0
  check_algebra(heisenberg3());
}

TEST_CASE("the extension trivializes exactly its kernel classes") {
  // case (3,1) over F2: (0,6) -> (0,0)
  auto e31 = build_extension(ExtCase::rank31, fp_entry("F2"));
  CHECK(h2_graded(e31.total) == GradedDims{0, 0});

  // case (2,2) over Q: (2,0) -> (0,0)
  auto e22 = build_extension(ExtCase::rank22, q_entry("Q"));
  CHECK(h2_graded(e22.total) == GradedDims{0, 0});

  // case (2,2) over F3: base (1 + 0 + 2, 0) = HC1 part stays, R_0^2 dies
  auto slf3 = build_sl(2, 2, fp_entry("F3"));
  GradedDims base = h2_graded(slf3.lie);
  auto ef3 = build_extension(ExtCase::rank22, fp_entry("F3"));
  GradedDims after = h2_graded(ef3.total);
  CHECK(after.odd == base.odd);
  CHECK(after.even + ef3.kernel_dim() == base.even);
}

TEST_CASE("h2_details records the pieces the answer is derived from") {
  auto sl = build_sl(3, 1, fp_entry("F2"));
  H2Details d = h2_details(sl.lie);
  CHECK(d.h2 == GradedDims{0, 6});
  CHECK(d.kernel_dim.even - d.b2_rank.even == d.h2.even);
  CHECK(d.kernel_dim.odd - d.b2_rank.odd == d.h2.odd);
  CHECK(d.lambda2_count.even ==
        d.d2_rank.even + d.kernel_dim.even);
  CHECK(d.lambda2_count.odd == d.d2_rank.odd + d.kernel_dim.odd);
  CHECK(d.b2_generators > 0);
}
