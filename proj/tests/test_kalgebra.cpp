#include <doctest.h>

#include "oracle.hpp"
#include "stlie/catalog.hpp"

using namespace stlie;

namespace {

const KAlgebra<PrimeField>& fp_entry(const char* name) {
  return std::get<KAlgebra<PrimeField>>(find_builtin(name)->algebra);
}
const KAlgebra<RationalField>& q_entry(const char* name) {
  return std::get<KAlgebra<RationalField>>(find_builtin(name)->algebra);
}

template <class F>
std::pair<std::size_t, std::size_t> r2_r0(const KAlgebra<F>& A) {
  return {A.ideal_Im(2).quotient_dim, A.ideal_Im(0).quotient_dim};
}

}  // namespace

TEST_CASE("make_algebra validates the unit law and associativity") {
  PrimeField F2(2);
  // F2 itself
  CHECK_NOTHROW(KAlgebra<PrimeField>(F2, {"1"}, 0, {{F2.one()}}));

  // dual numbers pass
  CHECK_NOTHROW(fp_entry("dual-F2"));

  // broken unit row: x*1 = 0
  using Vec = KAlgebra<PrimeField>::Vec;
  std::vector<Vec> bad_unit = {
      {1, 0}, {0, 1},
      {0, 0}, {1, 0},
  };
  CHECK_THROWS_AS((KAlgebra<PrimeField>(F2, {"1", "x"}, 0, bad_unit)), InvalidAlgebraError);

  // planted non-associative triple: x*x = y, x*y = 1, y*x = y*y = 0
  std::vector<Vec> bad_assoc = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
      {0, 1, 0}, {0, 0, 1}, {1, 0, 0},
      {0, 0, 1}, {0, 0, 0}, {0, 0, 0},
  };
  CHECK_THROWS_WITH_AS((KAlgebra<PrimeField>(F2, {"1", "x", "y"}, 0, bad_assoc)),
                       doctest::Contains("associativity fails at"), InvalidAlgebraError);

  // the declared unit index must actually be the unit
  CHECK_THROWS_AS((KAlgebra<PrimeField>(F2, {"1", "x"}, 1,
                                        {{1, 0}, {0, 1}, {0, 1}, {0, 0}})),
                  InvalidAlgebraError);
}

TEST_CASE("multiplication is the bilinear extension of the table") {
  const auto& W = fp_entry("weyl-F2");
  const PrimeField& K = W.field();

  // unit law
  auto b = W.basis_element(3);
  CHECK(W.mul(W.unit_element(), b) == b);

  // dual numbers: x*x = 0
  const auto& D = fp_entry("dual-F2");
  CHECK(D.is_zero_vec(D.mul(D.basis_element(1), D.basis_element(1))));

  // weyl truncation: y*x = xy + 1
  auto yx = W.mul(W.basis_element(2), W.basis_element(1));
  KAlgebra<PrimeField>::Vec want{K.one(), 0, 0, K.one()};
  CHECK(yx == want);

  // dimension mismatch is rejected
  CHECK_THROWS_AS(W.mul(W.basis_element(0), D.basis_element(0)), Error);
}

TEST_CASE("commutator span") {
  // commutative entries have [R,R] = 0
  for (const char* name : {"F2", "F3", "dual-F2", "dual-F3", "group-F3C3"}) {
    const auto& A = fp_entry(name);
    CHECK(A.is_commutative());
    CHECK(A.commutator_span().dim() == 0);
  }

  // weyl truncation: 1 lies in [R,R]
  const auto& W = fp_entry("weyl-F2");
  auto span = W.commutator_span();
  CHECK(span.contains(W.unit_element()));

  // M2(F2): the commutator span has dimension 3 (brute-force oracle)
  const auto& M = fp_entry("mat2-F2");
  const PrimeField& K = M.field();
  Mat<PrimeField> all(K, M.dim() * M.dim(), M.dim());
  std::size_t r = 0;
  for (std::size_t i = 0; i < M.dim(); ++i)
    for (std::size_t j = 0; j < M.dim(); ++j) {
      auto c = M.commutator(M.basis_element(i), M.basis_element(j));
      for (std::size_t t = 0; t < M.dim(); ++t) all.at(r, t) = c[t];
      ++r;
    }
  CHECK(testing::oracle_rank(all) == 3);
  CHECK(M.commutator_span().dim() == 3);
  CHECK(M.commutator_span().contains(M.unit_element()));
}

TEST_CASE("ideal_Im on the boundary instances") {
  // commutative over Q: I_0 = 0, R_0 = R
  const auto& Q1 = q_entry("Q");
  auto i0 = Q1.ideal_Im(0);
  CHECK(i0.span.dim() == 0);
  CHECK(i0.quotient_dim == 1);

  // over Q: I_2 = R, R_2 = 0
  auto i2 = Q1.ideal_Im(2);
  CHECK(i2.span.dim() == 1);
  CHECK(i2.quotient_dim == 0);

  // weyl truncation over F2: I_2 = R (1 is a commutator) so R_2 = 0
  auto [w2, w0] = r2_r0(fp_entry("weyl-F2"));
  CHECK(w2 == 0);
  CHECK(w0 == 0);

  // F2 dual numbers, commutative char 2: I_2 = 0, R_2 = R
  auto [d2, d0] = r2_r0(fp_entry("dual-F2"));
  CHECK(d2 == 2);
  CHECK(d0 == 2);

  // M2(F2): both quotients vanish
  auto [m2, m0] = r2_r0(fp_entry("mat2-F2"));
  CHECK(m2 == 0);
  CHECK(m0 == 0);
}

TEST_CASE("ideal closure properties over the catalog") {
  for (const CatalogEntry& e : builtin_catalog()) {
    std::visit(
        [&](const auto& A) {
          using F = std::decay_t<decltype(A.field())>;
          const F& K = A.field();
          for (unsigned m : {0u, 2u, 3u}) {
            IdealData<F> ideal = A.ideal_Im(m);
            // two-sided closure: products of span vectors with basis stay inside
            for (std::size_t r = 0; r < ideal.span.dim(); ++r) {
              typename KAlgebra<F>::Vec v(ideal.span.basis.row(r).begin(),
                                          ideal.span.basis.row(r).end());
              for (std::size_t k = 0; k < A.dim(); ++k) {
                CHECK(ideal.span.contains(A.mul(A.basis_element(k), v)));
                CHECK(ideal.span.contains(A.mul(v, A.basis_element(k))));
              }
            }
            // right-sided generation [R,R]R also spans the same ideal
            RowAccumulator<F> right(K, A.dim());
            auto scalar_m = K.from_int(static_cast<long long>(m));
            for (std::size_t i = 0; i < A.dim(); ++i)
              right.add(A.scale(scalar_m, A.basis_element(i)));
            for (std::size_t i = 0; i < A.dim(); ++i)
              for (std::size_t j = i + 1; j < A.dim(); ++j) {
                auto c = A.commutator(A.basis_element(i), A.basis_element(j));
                right.add(c);
                for (std::size_t k = 0; k < A.dim(); ++k)
                  right.add(A.mul(c, A.basis_element(k)));
              }
            CHECK(right.rank() == ideal.span.dim());
            CHECK(ideal.quotient_dim == A.dim() - ideal.span.dim());
          }
          // monotonicity: I_0 inside I_m
          IdealData<F> i0 = A.ideal_Im(0);
          for (unsigned m : {2u, 3u, 5u}) {
            IdealData<F> im = A.ideal_Im(m);
            for (std::size_t r = 0; r < i0.span.dim(); ++r) {
              CHECK(im.span.contains(i0.span.basis.row(r)));
            }
          }
        },
        e.algebra);
  }
}

TEST_CASE("characteristic controls R_2 for commutative algebras") {
  // char != 2 commutative: R_2 = 0
  CHECK(r2_r0(fp_entry("F3")).first == 0);
  CHECK(r2_r0(fp_entry("dual-F3")).first == 0);
  CHECK(r2_r0(fp_entry("group-F3C3")).first == 0);
  CHECK(r2_r0(q_entry("Q")).first == 0);
  CHECK(r2_r0(q_entry("dual-Q")).first == 0);
  // char 2 commutative: R_2 = R
  CHECK(r2_r0(fp_entry("F2")).first == 1);
  CHECK(r2_r0(fp_entry("dual-F2")).first == 2);
}

TEST_CASE("catalog inventory") {
  const auto& cat = builtin_catalog();
  CHECK(cat.size() == 9);
  CHECK(find_builtin("F2") != nullptr);
  CHECK(find_builtin("Q") != nullptr);
  CHECK(find_builtin("nope") == nullptr);

  auto [f2r2, f2r0] = r2_r0(fp_entry("F2"));
  CHECK(f2r2 == 1);
  CHECK(f2r0 == 1);
  auto [qr2, qr0] = r2_r0(q_entry("Q"));
  CHECK(qr2 == 0);
  CHECK(qr0 == 1);
  // group algebra F3[C3]: commutative, char 3
  auto [gr2, gr0] = r2_r0(fp_entry("group-F3C3"));
  CHECK(gr2 == 0);
  CHECK(gr0 == 3);
}
