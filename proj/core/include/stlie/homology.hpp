#pragma once

// Graded second homology of a finite-dimensional Lie superalgebra over a
// field.  The chain space Lambda^2 is the quotient of g (x) g by
// super-symmetrization and by squares of even vectors, so its dual is
// exactly the space of super 2-cochains; B_2 is spanned by the Jacobi
// elements J(i,j,k), and H_2 = ker d_2 / B_2 splits by parity.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stlie/errors.hpp"
#include "stlie/gf2.hpp"
#include "stlie/linalg.hpp"
#include "stlie/superalgebra.hpp"

namespace stlie {

struct GradedDims {
  std::size_t even = 0;
  std::size_t odd = 0;

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
  std::string str() const {
    return "even " + std::to_string(even) + ", odd " + std::to_string(odd);
  }
};

// Basis of Lambda^2 g: pairs (i,j) with i < j plus (i,i) for odd i, in
// lexicographic order.
struct Lambda2Basis {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<Parity> parity;              // per pair
  std::vector<std::uint32_t> index_table;  // dim*dim lookup, npos when absent
  std::size_t dim = 0;                     // of the underlying algebra

  static constexpr std::uint32_t npos = static_cast<std::uint32_t>(-1);

  std::size_t size() const { return pairs.size(); }

  std::uint32_t index(std::uint32_t i, std::uint32_t j) const {
    return index_table[i * dim + j];
  }
};

template <class F>
Lambda2Basis lambda2(const LieSuperAlgebra<F>& g) {
  Lambda2Basis L;
  L.dim = g.dim();
  L.index_table.assign(L.dim * L.dim, Lambda2Basis::npos);
  for (std::uint32_t i = 0; i < L.dim; ++i) {
    for (std::uint32_t j = i; j < L.dim; ++j) {
      if (i == j && !is_odd(g.parity(i))) continue;
      L.index_table[i * L.dim + j] = static_cast<std::uint32_t>(L.pairs.size());
      L.pairs.emplace_back(i, j);
      L.parity.push_back(parity_sum(g.parity(i), g.parity(j)));
    }
  }
  return L;
}

namespace detail {

// accumulate c * (class of g_l wedge g_t) into out, normalizing the pair:
// g_l (x) g_t = -(-1)^{p_l p_t} g_t (x) g_l, and (t,t) survives only for odd t
template <class F>
void wedge_acc(const F& K, const LieSuperAlgebra<F>& g, const Lambda2Basis& L,
               std::uint32_t l, std::uint32_t t, const typename F::Elem& c,
               Scratch<F>& out) {
  if (l < t) {
    out.acc(L.index(l, t), c);
  } else if (l > t) {
    bool both_odd = is_odd(g.parity(l)) && is_odd(g.parity(t));
    out.acc(L.index(t, l), both_odd ? c : K.neg(c));
  } else if (is_odd(g.parity(l))) {
    out.acc(L.index(l, l), c);
  }
}

}  // namespace detail

// J(i,j,k) = (-1)^{p_i p_k} [g_i,g_j] ^ g_k + (-1)^{p_i p_j} [g_j,g_k] ^ g_i
//          + (-1)^{p_j p_k} [g_k,g_i] ^ g_j, expanded in the Lambda^2 basis
template <class F>
SparseVec<F> jacobi_row(const LieSuperAlgebra<F>& g, const Lambda2Basis& L, std::size_t i,
                        std::size_t j, std::size_t k) {
  const F& K = g.field();
  detail::Scratch<F> s(K, L.size());
  auto term = [&](std::size_t a, std::size_t b, std::size_t c, bool negate) {
    for (const auto& [l, w] : g.bracket_row(a, b)) {
      detail::wedge_acc(K, g, L, l, static_cast<std::uint32_t>(c), negate ? K.neg(w) : w, s);
    }
  };
  bool n1 = is_odd(g.parity(i)) && is_odd(g.parity(k));
  bool n2 = is_odd(g.parity(i)) && is_odd(g.parity(j));
  bool n3 = is_odd(g.parity(j)) && is_odd(g.parity(k));
  term(i, j, k, n1);
  term(j, k, i, n2);
  term(k, i, j, n3);
  SparseVec<F> row;
  std::sort(s.touched.begin(), s.touched.end());
  for (std::uint32_t t : s.touched) {
    if (!K.is_zero(s.vals[t])) row.emplace_back(t, s.vals[t]);
  }
  return row;
}

template <class F>
struct Chain2Data {
  Lambda2Basis basis;
  Mat<F> d2;                          // (dim g) x |Lambda^2|; column (i,j) = [g_i, g_j]
  std::vector<SparseVec<F>> b2_gens;  // Jacobi rows for triples i <= j <= k
  std::vector<Parity> b2_parity;      // parity of each generator row
};

// Builds d2 and the B_2 generators and asserts d2 kills every generator
// (the chain-level super-Jacobi identity).
template <class F>
Chain2Data<F> chain2(const LieSuperAlgebra<F>& g) {
  const F& K = g.field();
  Chain2Data<F> ch{lambda2(g), Mat<F>(K, g.dim(), 0), {}, {}};
  const Lambda2Basis& L = ch.basis;
  ch.d2 = Mat<F>(K, g.dim(), L.size());
  for (std::size_t p = 0; p < L.size(); ++p) {
    auto [i, j] = L.pairs[p];
    for (const auto& [k, c] : g.bracket_row(i, j)) ch.d2.at(k, p) = c;
  }

  std::vector<typename F::Elem> probe(g.dim(), K.zero());
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j)
      for (std::size_t k = j; k < g.dim(); ++k) {
        SparseVec<F> row = jacobi_row(g, L, i, j, k);
        if (row.empty()) continue;
        // d2 applied to the generator must vanish
        for (const auto& [p, c] : row) {
          auto [a, b] = L.pairs[p];
          for (const auto& [t, w] : g.bracket_row(a, b)) {
            if (K.is_zero(probe[t])) touched.push_back(t);
            probe[t] = K.add(probe[t], K.mul(c, w));
          }
        }
        bool zero = true;
        for (std::uint32_t t : touched) {
          if (!K.is_zero(probe[t])) zero = false;
          probe[t] = K.zero();
        }
        touched.clear();
        if (!zero) {
          throw InconsistentAlgebraError(
              "d2 does not annihilate the Jacobi generator at triple (" + g.label(i) + ", " +
              g.label(j) + ", " + g.label(k) + ")");
        }
        ch.b2_parity.push_back(
            parity_sum(parity_sum(g.parity(i), g.parity(j)), g.parity(k)));
        ch.b2_gens.push_back(std::move(row));
      }
  return ch;
}

// Per-parity dimensions underlying an H_2 computation; the final answer is
// recomputable from the pieces (h2 = kernel - b2_rank per block).
struct H2Details {
  GradedDims lambda2_count;
  GradedDims d2_rank;
  GradedDims kernel_dim;
  GradedDims b2_rank;
  GradedDims h2;
  std::size_t b2_generators = 0;
};

namespace detail {

template <class F>
std::size_t block_b2_rank(const F& K, const Chain2Data<F>& ch,
                          const std::vector<std::uint32_t>& pos_of, Parity p,
                          std::size_t block_cols) {
  bool use_gf2 = false;
  if constexpr (std::is_same_v<F, PrimeField>) use_gf2 = K.modulus() == 2;
  if (use_gf2) {
    gf2::Accumulator acc(block_cols);
    std::vector<std::uint32_t> ones;
    for (std::size_t r = 0; r < ch.b2_gens.size(); ++r) {
      if (ch.b2_parity[r] != p) continue;
      ones.clear();
      for (const auto& [idx, c] : ch.b2_gens[r]) {
        if constexpr (std::is_same_v<F, PrimeField>) {
          if (c & 1) ones.push_back(pos_of[idx]);
        }
      }
      acc.add_indices(ones);
    }
    return acc.rank();
  }
  RowAccumulator<F> acc(K, block_cols);
  std::vector<std::pair<std::uint32_t, typename F::Elem>> reindexed;
  for (std::size_t r = 0; r < ch.b2_gens.size(); ++r) {
    if (ch.b2_parity[r] != p) continue;
    reindexed.clear();
    for (const auto& [idx, c] : ch.b2_gens[r]) reindexed.emplace_back(pos_of[idx], c);
    acc.add_sparse(reindexed);
  }
  return acc.rank();
}

}  // namespace detail

template <class F>
H2Details h2_details(const LieSuperAlgebra<F>& g) {
  const F& K = g.field();
  Chain2Data<F> ch = chain2(g);
  const Lambda2Basis& L = ch.basis;
  H2Details out;
  out.b2_generators = ch.b2_gens.size();

  // positions of each Lambda^2 index inside its parity block
  std::vector<std::uint32_t> pos_of(L.size(), 0);
  std::size_t even_cols = 0, odd_cols = 0;
  for (std::size_t p = 0; p < L.size(); ++p) {
    if (is_odd(L.parity[p])) pos_of[p] = static_cast<std::uint32_t>(odd_cols++);
    else pos_of[p] = static_cast<std::uint32_t>(even_cols++);
  }
  out.lambda2_count = {even_cols, odd_cols};

  for (Parity p : {Parity::even, Parity::odd}) {
    std::size_t cols = is_odd(p) ? odd_cols : even_cols;
    Mat<F> block(K, g.dim(), cols);
    for (std::size_t c = 0; c < L.size(); ++c) {
      if (L.parity[c] != p) continue;
      for (std::size_t r = 0; r < g.dim(); ++r) block.at(r, pos_of[c]) = ch.d2.at(r, c);
    }
    std::size_t rank = rref(block).rank;
    std::size_t kernel = cols - rank;
    std::size_t b2r = detail::block_b2_rank(K, ch, pos_of, p, cols);
    if (b2r > kernel) {
      throw InconsistentAlgebraError("B2 rank exceeds kernel of d2 in a parity block");
    }
    if (is_odd(p)) {
      out.d2_rank.odd = rank;
      out.kernel_dim.odd = kernel;
      out.b2_rank.odd = b2r;
      out.h2.odd = kernel - b2r;
    } else {
      out.d2_rank.even = rank;
      out.kernel_dim.even = kernel;
      out.b2_rank.even = b2r;
      out.h2.even = kernel - b2r;
    }
  }
  return out;
}

template <class F>
GradedDims h2_graded(const LieSuperAlgebra<F>& g) {
  return h2_details(g).h2;
}

template <class F>
GradedDims h2_of_sl(std::size_t m, std::size_t n, const KAlgebra<F>& A,
                    std::size_t budget = 70) {
  if (m + n < 3) throw UnsupportedRankError("sl(m,n,R) needs m+n >= 3");
  SlAlgebra<F> sl = build_sl(m, n, A);
  if (sl.dim() > budget) {
    throw ResourceError("dim sl(" + std::to_string(m) + "," + std::to_string(n) + ",R) = " +
                        std::to_string(sl.dim()) + " exceeds size budget " +
                        std::to_string(budget));
  }
  return h2_graded(sl.lie);
}

}  // namespace stlie
