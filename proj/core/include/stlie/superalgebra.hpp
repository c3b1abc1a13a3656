#pragma once

// Lie superalgebras with explicit homogeneous bases and sparse bracket
// structure constants; constructors for gl(m,n,R) and sl(m,n,R) and the
// exhaustive axiom / bracket-identity verifiers.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stlie/check_report.hpp"
#include "stlie/errors.hpp"
#include "stlie/kalgebra.hpp"
#include "stlie/linalg.hpp"

namespace stlie {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline bool is_odd(Parity p) { return p == Parity::odd; }

// sparse coordinate vector: (index, coefficient), strictly increasing indices
template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Elem>>;

template <class F>
class LieSuperAlgebra {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  LieSuperAlgebra(F K, std::vector<Parity> parity, std::vector<std::string> labels,
                  std::vector<SparseVec<F>> bracket)
      : K_(std::move(K)),
        parity_(std::move(parity)),
        labels_(std::move(labels)),
        bracket_(std::move(bracket)) {
    dim_ = parity_.size();
    if (labels_.size() != dim_) throw Error("superalgebra: label count mismatch");
    if (bracket_.size() != dim_ * dim_) throw Error("superalgebra: bracket tensor shape");
    for (const SparseVec<F>& row : bracket_) {
      std::uint32_t prev = 0;
      bool first = true;
      for (const auto& [idx, c] : row) {
        if (idx >= dim_) throw Error("superalgebra: bracket index out of range");
        if (!first && idx <= prev) throw Error("superalgebra: bracket row not sorted");
        prev = idx;
        first = false;
        (void)c;
      }
    }
  }

  std::size_t dim() const { return dim_; }
  const F& field() const { return K_; }
  Parity parity(std::size_t i) const { return parity_[i]; }
  const std::vector<Parity>& parities() const { return parity_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t even_dim() const {
    std::size_t n = 0;
    for (Parity p : parity_)
      if (!is_odd(p)) ++n;
    return n;
  }
  std::size_t odd_dim() const { return dim_ - even_dim(); }

  const SparseVec<F>& bracket_row(std::size_t i, std::size_t j) const {
    return bracket_[i * dim_ + j];
  }

  // out += c * [g_i, g_j]
  void bracket_acc(std::size_t i, std::size_t j, const Elem& c, Vec& out) const {
    for (const auto& [k, w] : bracket_row(i, j)) out[k] = K_.add(out[k], K_.mul(c, w));
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error("bracket: operand length");
    Vec out(dim_, K_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (K_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (K_.is_zero(y[j])) continue;
        Elem c = K_.mul(x[i], y[j]);
        bracket_acc(i, j, c, out);
      }
    }
    return out;
  }

  bool is_zero_vec(const Vec& v) const {
    for (const Elem& e : v)
      if (!K_.is_zero(e)) return false;
    return true;
  }

 private:
  F K_;
  std::size_t dim_ = 0;
  std::vector<Parity> parity_;
  std::vector<std::string> labels_;
  std::vector<SparseVec<F>> bracket_;
};

// ---------------------------------------------------------------------------
// gl(m,n,R)

// Index bookkeeping for the (m+n) x (m+n) matrix grading: positions are
// 1-based, omega(i) = even for i <= m and odd beyond.
struct GlLayout {
  std::size_t m = 0, n = 0, adim = 0;

  std::size_t size() const { return (m + n) * (m + n) * adim; }
  std::size_t nrows() const { return m + n; }

  Parity omega(std::size_t i) const { return i <= m ? Parity::even : Parity::odd; }
  Parity position_parity(std::size_t i, std::size_t j) const {
    return parity_sum(omega(i), omega(j));
  }

  std::size_t index(std::size_t i, std::size_t j, std::size_t lam) const {
    return ((i - 1) * (m + n) + (j - 1)) * adim + lam;
  }
};

template <class F>
struct GlAlgebra {
  LieSuperAlgebra<F> lie;
  GlLayout layout;
  KAlgebra<F> coeff;
};

// [E_ij(a), E_kl(b)] = delta_jk E_il(ab) - (-1)^{deg deg} delta_li E_kj(ba)
template <class F>
GlAlgebra<F> build_gl(std::size_t m, std::size_t n, const KAlgebra<F>& A) {
  if (m + n < 2) throw UnsupportedRankError("gl(m,n,R) needs m+n >= 2");
  const F& K = A.field();
  GlLayout L{m, n, A.dim()};
  std::size_t N = m + n;
  std::size_t dim = L.size();

  std::vector<Parity> par(dim);
  std::vector<std::string> labels(dim);
  for (std::size_t i = 1; i <= N; ++i) {
    for (std::size_t j = 1; j <= N; ++j) {
      for (std::size_t lam = 0; lam < A.dim(); ++lam) {
        std::size_t idx = L.index(i, j, lam);
        par[idx] = L.position_parity(i, j);
        labels[idx] = "E" + std::to_string(i) + std::to_string(j) + "(" + A.label(lam) + ")";
      }
    }
  }

  std::vector<SparseVec<F>> rows(dim * dim);
  std::vector<typename F::Elem> dense(dim, K.zero());
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j)
      for (std::size_t lam = 0; lam < A.dim(); ++lam) {
        std::size_t x = L.index(i, j, lam);
        for (std::size_t k = 1; k <= N; ++k)
          for (std::size_t l = 1; l <= N; ++l)
            for (std::size_t mu = 0; mu < A.dim(); ++mu) {
              std::size_t y = L.index(k, l, mu);
              SparseVec<F>& row = rows[x * dim + y];
              if (j == k) {
                const auto& prod = A.table(lam, mu);
                for (std::size_t nu = 0; nu < A.dim(); ++nu) {
                  if (K.is_zero(prod[nu])) continue;
                  std::size_t t = L.index(i, l, nu);
                  if (K.is_zero(dense[t])) touched.push_back(static_cast<std::uint32_t>(t));
                  dense[t] = K.add(dense[t], prod[nu]);
                }
              }
              if (l == i) {
                bool negate = !(is_odd(par[x]) && is_odd(par[y]));
                const auto& prod = A.table(mu, lam);
                for (std::size_t nu = 0; nu < A.dim(); ++nu) {
                  if (K.is_zero(prod[nu])) continue;
                  std::size_t t = L.index(k, j, nu);
                  typename F::Elem c = negate ? K.neg(prod[nu]) : prod[nu];
                  if (K.is_zero(dense[t])) touched.push_back(static_cast<std::uint32_t>(t));
                  dense[t] = K.add(dense[t], c);
                }
              }
              std::sort(touched.begin(), touched.end());
              for (std::uint32_t t : touched) {
                if (!K.is_zero(dense[t])) row.emplace_back(t, dense[t]);
                dense[t] = K.zero();
              }
              touched.clear();
            }
      }
  return {LieSuperAlgebra<F>(K, std::move(par), std::move(labels), std::move(rows)), L, A};
}

// str(X) = sum_{i<=m} x_ii - sum_{j>m} x_jj, as coordinates over the
// coefficient algebra's basis
template <class F>
typename KAlgebra<F>::Vec supertrace(const GlLayout& L, const KAlgebra<F>& A,
                                     std::span<const typename F::Elem> X) {
  const F& K = A.field();
  if (X.size() != L.size()) throw Error("supertrace: operand length");
  typename KAlgebra<F>::Vec out(A.dim(), K.zero());
  for (std::size_t i = 1; i <= L.nrows(); ++i) {
    bool plus = i <= L.m;
    for (std::size_t lam = 0; lam < A.dim(); ++lam) {
      const typename F::Elem& c = X[L.index(i, i, lam)];
      out[lam] = plus ? K.add(out[lam], c) : K.sub(out[lam], c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// sl(m,n,R)

// sl is cut out of gl by the linear condition str(X) in [R,R]; its basis is
// every off-diagonal E_ij(r_lambda) followed by the RREF basis of the
// admissible diagonal subspace.
template <class F>
struct SlAlgebra {
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  LieSuperAlgebra<F> lie;
  GlLayout layout;
  KAlgebra<F> coeff;
  Subspace<F> diag_subspace;  // inside R^{m+n} diag coordinates, dim (m+n)*adim
  std::size_t off_dim = 0;

  std::size_t dim() const { return off_dim + diag_subspace.dim(); }
  std::size_t diag_dim() const { return diag_subspace.dim(); }

  // sl basis index of E_ij(r_lam), i != j (1-based positions)
  std::size_t x_index(std::size_t i, std::size_t j, std::size_t lam) const {
    std::size_t N = layout.nrows();
    std::size_t pos = (i - 1) * (N - 1) + (j < i ? j - 1 : j - 2);
    return pos * layout.adim + lam;
  }

  // sl coordinates of E_ij(a) for an arbitrary algebra element a
  Vec x_element(std::size_t i, std::size_t j, const typename KAlgebra<F>::Vec& a) const {
    Vec v(dim(), coeff.field().zero());
    for (std::size_t lam = 0; lam < layout.adim; ++lam) v[x_index(i, j, lam)] = a[lam];
    return v;
  }

  // diag coordinate (i, lam) inside R^{m+n}
  std::size_t diag_coord(std::size_t i, std::size_t lam) const {
    return (i - 1) * layout.adim + lam;
  }

  Vec to_gl(std::span<const Elem> v) const {
    const F& K = coeff.field();
    Vec g(layout.size(), K.zero());
    std::size_t N = layout.nrows();
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = 1; j <= N; ++j) {
        if (i == j) continue;
        for (std::size_t lam = 0; lam < layout.adim; ++lam)
          g[layout.index(i, j, lam)] = v[x_index(i, j, lam)];
      }
    for (std::size_t d = 0; d < diag_dim(); ++d) {
      const Elem& c = v[off_dim + d];
      if (K.is_zero(c)) continue;
      for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t lam = 0; lam < layout.adim; ++lam) {
          const Elem& b = diag_subspace.basis.at(d, diag_coord(i, lam));
          if (!K.is_zero(b)) {
            Elem& slot = g[layout.index(i, i, lam)];
            slot = K.add(slot, K.mul(c, b));
          }
        }
    }
    return g;
  }

  // expresses a gl vector known to lie in sl; throws if it does not
  Vec from_gl(std::span<const Elem> g) const {
    const F& K = coeff.field();
    Vec v(dim(), K.zero());
    std::size_t N = layout.nrows();
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = 1; j <= N; ++j) {
        if (i == j) continue;
        for (std::size_t lam = 0; lam < layout.adim; ++lam)
          v[x_index(i, j, lam)] = g[layout.index(i, j, lam)];
      }
    // diagonal part: RREF basis, so coefficients sit at the pivots
    std::vector<Elem> diag(diag_subspace.ambient, K.zero());
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t lam = 0; lam < layout.adim; ++lam)
        diag[diag_coord(i, lam)] = g[layout.index(i, i, lam)];
    for (std::size_t d = 0; d < diag_dim(); ++d) {
      Elem c = diag[diag_subspace.pivots[d]];
      if (K.is_zero(c)) continue;
      v[off_dim + d] = c;
      for (std::size_t t = 0; t < diag_subspace.ambient; ++t) {
        const Elem& b = diag_subspace.basis.at(d, t);
        if (!K.is_zero(b)) diag[t] = K.sub(diag[t], K.mul(c, b));
      }
    }
    for (const Elem& e : diag) {
      if (!K.is_zero(e))
        throw InconsistentAlgebraError("vector outside sl: diagonal residue nonzero");
    }
    return v;
  }
};

template <class F>
bool is_perfect(const LieSuperAlgebra<F>& g);

template <class F>
SlAlgebra<F> build_sl(std::size_t m, std::size_t n, const KAlgebra<F>& A) {
  if (m + n < 3) throw UnsupportedRankError("sl(m,n,R) needs m+n >= 3");
  const F& K = A.field();
  GlAlgebra<F> gl = build_gl(m, n, A);
  const GlLayout& L = gl.layout;
  std::size_t N = m + n;

  // admissible diagonals: d in R^{m+n} with str(d) in [R,R]
  Subspace<F> comm = A.commutator_span();
  QuotientMap<F> qm = QuotientMap<F>::mod(std::move(comm));
  Mat<F> cond(K, qm.dim(), N * A.dim());
  for (std::size_t i = 1; i <= N; ++i) {
    for (std::size_t lam = 0; lam < A.dim(); ++lam) {
      typename KAlgebra<F>::Vec e = A.basis_element(lam);
      if (i > L.m) {
        for (auto& c : e) c = K.neg(c);
      }
      std::vector<typename F::Elem> img = qm.apply(e);
      for (std::size_t r = 0; r < qm.dim(); ++r) cond.at(r, (i - 1) * A.dim() + lam) = img[r];
    }
  }
  Subspace<F> diag = kernel_basis(cond);

  SlAlgebra<F> sl{LieSuperAlgebra<F>(K, {}, {}, {}), L, A, std::move(diag),
                  N * (N - 1) * A.dim()};
  std::size_t dim = sl.off_dim + sl.diag_subspace.dim();

  std::vector<Parity> par(dim);
  std::vector<std::string> labels(dim);
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j) {
      if (i == j) continue;
      for (std::size_t lam = 0; lam < A.dim(); ++lam) {
        std::size_t idx = sl.x_index(i, j, lam);
        par[idx] = L.position_parity(i, j);
        labels[idx] = "E" + std::to_string(i) + std::to_string(j) + "(" + A.label(lam) + ")";
      }
    }
  for (std::size_t d = 0; d < sl.diag_subspace.dim(); ++d) {
    std::size_t piv = sl.diag_subspace.pivots[d];
    std::size_t i = piv / A.dim() + 1;
    std::size_t lam = piv % A.dim();
    par[sl.off_dim + d] = Parity::even;
    labels[sl.off_dim + d] = "D" + std::to_string(i) + "(" + A.label(lam) + ")";
  }

  // bracket rows: compute in gl, express back in the sl basis
  std::vector<typename SlAlgebra<F>::Vec> basis_gl(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    typename SlAlgebra<F>::Vec unit(dim, K.zero());
    unit[s] = K.one();
    basis_gl[s] = sl.to_gl(unit);
  }
  std::vector<SparseVec<F>> rows(dim * dim);
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t t = 0; t < dim; ++t) {
      typename SlAlgebra<F>::Vec w = gl.lie.bracket(basis_gl[s], basis_gl[t]);
      typename SlAlgebra<F>::Vec v = sl.from_gl(w);
      SparseVec<F> row;
      for (std::size_t k = 0; k < dim; ++k) {
        if (!K.is_zero(v[k])) row.emplace_back(static_cast<std::uint32_t>(k), v[k]);
      }
      rows[s * dim + t] = std::move(row);
    }
  }
  sl.lie = LieSuperAlgebra<F>(K, std::move(par), std::move(labels), std::move(rows));
  if (!is_perfect(sl.lie)) {
    throw InconsistentAlgebraError("constructed sl(m,n,R) is not perfect");
  }
  return sl;
}

// ---------------------------------------------------------------------------
// verifiers

template <class F>
bool is_perfect(const LieSuperAlgebra<F>& g) {
  RowAccumulator<F> acc(g.field(), g.dim());
  for (std::size_t i = 0; i < g.dim() && acc.rank() < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim() && acc.rank() < g.dim(); ++j) {
      acc.add_sparse(g.bracket_row(i, j));
    }
  }
  return acc.rank() == g.dim();
}

namespace detail {

// dense scratch with touched-index tracking, for triple sweeps
template <class F>
struct Scratch {
  const F& K;
  std::vector<typename F::Elem> vals;
  std::vector<std::uint32_t> touched;

  explicit Scratch(const F& k, std::size_t n) : K(k), vals(n, k.zero()) {}

  void acc(std::uint32_t i, const typename F::Elem& c) {
    if (K.is_zero(vals[i])) touched.push_back(i);
    vals[i] = K.add(vals[i], c);
  }

  bool is_zero_and_clear() {
    bool zero = true;
    for (std::uint32_t i : touched) {
      if (!K.is_zero(vals[i])) zero = false;
      vals[i] = K.zero();
    }
    touched.clear();
    return zero;
  }
};

}  // namespace detail

// Exhaustive (S1)/(S2)/(S3) sweep plus parity homogeneity of the bracket.
// (S3) is checked on even basis elements and on sums of two of them, which
// with bilinearity covers the whole even part.
template <class F>
CheckReport verify_superaxioms(const LieSuperAlgebra<F>& g) {
  const F& K = g.field();
  std::size_t d = g.dim();
  CheckReport rep;

  // parity homogeneity
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Parity want = parity_sum(g.parity(i), g.parity(j));
      bool ok = true;
      for (const auto& [k, c] : g.bracket_row(i, j)) {
        (void)c;
        if (g.parity(k) != want) ok = false;
      }
      if (ok) rep.pass();
      else rep.fail("parity: [" + g.label(i) + ", " + g.label(j) + "] not homogeneous");
    }

  // (S1)
  detail::Scratch<F> s(K, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      bool both_odd = is_odd(g.parity(i)) && is_odd(g.parity(j));
      for (const auto& [k, c] : g.bracket_row(i, j)) s.acc(k, c);
      for (const auto& [k, c] : g.bracket_row(j, i)) s.acc(k, both_odd ? K.neg(c) : c);
      if (s.is_zero_and_clear()) rep.pass();
      else rep.fail("(S1) fails at (" + g.label(i) + ", " + g.label(j) + ")");
    }

  // (S3) on even basis elements and their pairwise sums
  for (std::size_t i = 0; i < d; ++i) {
    if (is_odd(g.parity(i))) continue;
    if (g.bracket_row(i, i).empty()) rep.pass();
    else {
      for (const auto& [k, c] : g.bracket_row(i, i)) s.acc(k, c);
      if (s.is_zero_and_clear()) rep.pass();
      else rep.fail("(S3) fails at " + g.label(i));
    }
    for (std::size_t j = i + 1; j < d; ++j) {
      if (is_odd(g.parity(j))) continue;
      for (const auto& [k, c] : g.bracket_row(i, i)) s.acc(k, c);
      for (const auto& [k, c] : g.bracket_row(i, j)) s.acc(k, c);
      for (const auto& [k, c] : g.bracket_row(j, i)) s.acc(k, c);
      for (const auto& [k, c] : g.bracket_row(j, j)) s.acc(k, c);
      if (s.is_zero_and_clear()) rep.pass();
      else rep.fail("(S3) fails at " + g.label(i) + " + " + g.label(j));
    }
  }

  // (S2): [x,[y,z]] - [[x,y],z] - (-1)^{deg x deg y} [y,[x,z]] = 0
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      bool xy_odd = is_odd(g.parity(x)) && is_odd(g.parity(y));
      for (std::size_t z = 0; z < d; ++z) {
        for (const auto& [k, c] : g.bracket_row(y, z))
          for (const auto& [l, w] : g.bracket_row(x, k)) s.acc(l, K.mul(c, w));
        for (const auto& [k, c] : g.bracket_row(x, y))
          for (const auto& [l, w] : g.bracket_row(k, z)) s.acc(l, K.neg(K.mul(c, w)));
        for (const auto& [k, c] : g.bracket_row(x, z))
          for (const auto& [l, w] : g.bracket_row(y, k))
            s.acc(l, xy_odd ? K.mul(c, w) : K.neg(K.mul(c, w)));
        if (s.is_zero_and_clear()) rep.pass();
        else
          rep.fail("(S2) fails at (" + g.label(x) + ", " + g.label(y) + ", " + g.label(z) +
                   ")");
      }
    }
  return rep;
}

// Bracket identities for T_ij(a,b) = [E_ij(a), E_ji(b)] and
// t(a,b) = T_1j(a,b) - T_1j(1, ba), verified exhaustively over basis triples
// of the coefficient algebra and all admissible index combinations.
template <class F>
CheckReport verify_lemma19(const SlAlgebra<F>& sl) {
  const F& K = sl.coeff.field();
  const KAlgebra<F>& A = sl.coeff;
  std::size_t N = sl.layout.nrows();
  CheckReport rep;

  auto X = [&](std::size_t i, std::size_t j, const typename KAlgebra<F>::Vec& a) {
    return sl.x_element(i, j, a);
  };
  auto T = [&](std::size_t i, std::size_t j, const typename KAlgebra<F>::Vec& a,
               const typename KAlgebra<F>::Vec& b) {
    return sl.lie.bracket(X(i, j, a), X(j, i, b));
  };
  auto vec_eq = [&](const auto& u, const auto& v) {
    for (std::size_t k = 0; k < u.size(); ++k)
      if (!K.eq(u[k], v[k])) return false;
    return true;
  };
  auto neg_vec = [&](auto v) {
    for (auto& c : v) c = K.neg(c);
    return v;
  };
  auto check = [&](bool ok, const char* tag, std::size_t i, std::size_t j, std::size_t k) {
    if (ok) rep.pass();
    else
      rep.fail(std::string(tag) + " fails at indices (" + std::to_string(i) + "," +
               std::to_string(j) + "," + std::to_string(k) + ")");
  };

  typename KAlgebra<F>::Vec one = A.unit_element();
  std::size_t da = A.dim();

  for (std::size_t la = 0; la < da; ++la) {
    typename KAlgebra<F>::Vec a = A.basis_element(la);
    for (std::size_t lb = 0; lb < da; ++lb) {
      typename KAlgebra<F>::Vec b = A.basis_element(lb);

      // (1.10)
      for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; j <= N; ++j) {
          if (i == j) continue;
          bool pos_odd = is_odd(sl.layout.position_parity(i, j));
          auto lhs = T(i, j, a, b);
          auto rhs = T(j, i, b, a);
          if (!pos_odd) rhs = neg_vec(rhs);
          check(vec_eq(lhs, rhs), "(1.10)", i, j, 0);
        }

      for (std::size_t lc = 0; lc < da; ++lc) {
        typename KAlgebra<F>::Vec c = A.basis_element(lc);
        typename KAlgebra<F>::Vec ab = A.mul(a, b);
        typename KAlgebra<F>::Vec ba = A.mul(b, a);

        for (std::size_t i = 1; i <= N; ++i)
          for (std::size_t j = 1; j <= N; ++j) {
            if (i == j) continue;
            auto Tij = T(i, j, a, b);
            bool pos_odd = is_odd(sl.layout.position_parity(i, j));

            // (1.11) needs a fourth index
            for (std::size_t k = 1; k <= N; ++k) {
              if (k == i || k == j) continue;
              for (std::size_t l = 1; l <= N; ++l) {
                if (l == i || l == j || l == k) continue;
                auto br = sl.lie.bracket(Tij, X(k, l, c));
                check(sl.lie.is_zero_vec(br), "(1.11)", i, j, k);
              }
            }

            for (std::size_t k = 1; k <= N; ++k) {
              if (k == i || k == j) continue;
              // (1.12)
              auto lhs = sl.lie.bracket(Tij, X(i, k, c));
              check(vec_eq(lhs, X(i, k, A.mul(ab, c))), "(1.12a)", i, j, k);
              lhs = sl.lie.bracket(Tij, X(k, i, c));
              check(vec_eq(lhs, neg_vec(X(k, i, A.mul(c, ab)))), "(1.12b)", i, j, k);
              // (1.13)
              lhs = sl.lie.bracket(Tij, X(j, k, c));
              auto rhs = X(j, k, A.mul(ba, c));
              if (!pos_odd) rhs = neg_vec(rhs);
              check(vec_eq(lhs, rhs), "(1.13a)", i, j, k);
              lhs = sl.lie.bracket(Tij, X(k, j, c));
              rhs = X(k, j, A.mul(c, ba));
              if (pos_odd) rhs = neg_vec(rhs);
              check(vec_eq(lhs, rhs), "(1.13b)", i, j, k);
            }

            // (1.14)
            {
              auto lhs = sl.lie.bracket(Tij, X(i, j, c));
              typename KAlgebra<F>::Vec cba = A.mul(c, ba);
              typename KAlgebra<F>::Vec arg =
                  pos_odd ? A.sub(A.mul(ab, c), cba) : A.add(A.mul(ab, c), cba);
              check(vec_eq(lhs, X(i, j, arg)), "(1.14)", i, j, 0);
            }
          }

        // t(a,b) = T_1j(a,b) - T_1j(1, ba): j-independence, then (1.15)/(1.16)
        {
          std::vector<typename SlAlgebra<F>::Vec> t_of_j;
          std::vector<typename SlAlgebra<F>::Vec> tsharp_of_j;
          typename KAlgebra<F>::Vec ab = A.mul(a, b);
          typename KAlgebra<F>::Vec ba = A.mul(b, a);
          for (std::size_t j = 2; j <= N; ++j) {
            auto tj = sl.lie.bracket(X(1, j, a), X(j, 1, b));
            auto tj1 = sl.lie.bracket(X(1, j, one), X(j, 1, ba));
            auto ts1 = sl.lie.bracket(X(1, j, one), X(j, 1, ab));
            typename SlAlgebra<F>::Vec t(tj.size(), K.zero());
            typename SlAlgebra<F>::Vec ts(tj.size(), K.zero());
            for (std::size_t k = 0; k < tj.size(); ++k) {
              t[k] = K.sub(tj[k], tj1[k]);
              ts[k] = K.sub(tj[k], ts1[k]);
            }
            t_of_j.push_back(std::move(t));
            tsharp_of_j.push_back(std::move(ts));
          }
          bool t_indep = true, ts_indep = true;
          for (std::size_t q = 1; q < t_of_j.size(); ++q) {
            if (!vec_eq(t_of_j[q], t_of_j[0])) t_indep = false;
            if (!vec_eq(tsharp_of_j[q], tsharp_of_j[0])) ts_indep = false;
          }
          check(t_indep, "t j-independence", la, lb, 0);
          // the (1, ab) variant's j-independence is recorded, not required
          auto it = rep.info.find("tsharp_variant_j_independent");
          bool prev = it == rep.info.end() ? true : it->second;
          rep.info["tsharp_variant_j_independent"] = prev && ts_indep;

          const auto& t0 = t_of_j[0];
          typename KAlgebra<F>::Vec abm = A.sub(ab, ba);
          for (std::size_t lc = 0; lc < da; ++lc) {
            typename KAlgebra<F>::Vec c = A.basis_element(lc);
            for (std::size_t i = 2; i <= N; ++i) {
              auto lhs = sl.lie.bracket(t0, X(1, i, c));
              check(vec_eq(lhs, X(1, i, A.mul(abm, c))), "(1.15a)", i, la, lb);
              lhs = sl.lie.bracket(t0, X(i, 1, c));
              check(vec_eq(lhs, neg_vec(X(i, 1, A.mul(c, abm)))), "(1.15b)", i, la, lb);
            }
            for (std::size_t j = 2; j <= N; ++j)
              for (std::size_t k = 2; k <= N; ++k) {
                if (j == k) continue;
                auto lhs = sl.lie.bracket(t0, X(j, k, c));
                check(sl.lie.is_zero_vec(lhs), "(1.16)", j, k, 0);
              }
          }
        }
      }
    }
  }
  return rep;
}

// span{[gl,gl]} equals sl as subspaces of gl (test support)
template <class F>
bool derived_subalgebra_is_sl(const GlAlgebra<F>& gl, const SlAlgebra<F>& sl) {
  const F& K = gl.coeff.field();
  RowAccumulator<F> der(K, gl.lie.dim());
  for (std::size_t i = 0; i < gl.lie.dim(); ++i)
    for (std::size_t j = i; j < gl.lie.dim(); ++j) der.add_sparse(gl.lie.bracket_row(i, j));
  RowAccumulator<F> slspan(K, gl.lie.dim());
  for (std::size_t s = 0; s < sl.dim(); ++s) {
    typename SlAlgebra<F>::Vec unit(sl.dim(), K.zero());
    unit[s] = K.one();
    slspan.add(sl.to_gl(unit));
  }
  if (der.rank() != slspan.rank()) return false;
  return der.to_subspace().same_space(slspan.to_subspace());
}

}  // namespace stlie
