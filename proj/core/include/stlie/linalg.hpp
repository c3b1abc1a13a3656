#pragma once

// Exact dense linear algebra over PrimeField / RationalField: unique reduced
// row echelon forms, kernels, span arithmetic and quotient bookkeeping.
// Pivoting is always "first nonzero in column order" so every basis this
// module hands out is canonical and runs are reproducible.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stlie/errors.hpp"
#include "stlie/field.hpp"
#include "stlie/gf2.hpp"

namespace stlie {

template <class F>
class Mat {
 public:
  using Elem = typename F::Elem;

  Mat() : K_(default_field()) {}
  Mat(const F& K, std::size_t rows, std::size_t cols)
      : K_(K), rows_(rows), cols_(cols), a_(rows * cols, K.zero()) {}

  static Mat identity(const F& K, std::size_t n) {
    Mat m(K, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return K_; }

  Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

  Mat transposed() const {
    Mat t(K_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  static Mat vstack(const Mat& top, const Mat& bottom) {
    require_same_field(top.field().spec(), bottom.field().spec());
    if (top.cols() != bottom.cols()) throw Error("vstack: column count mismatch");
    Mat out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
      for (std::size_t c = 0; c < top.cols(); ++c) out.at(r, c) = top.at(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
      for (std::size_t c = 0; c < bottom.cols(); ++c) out.at(top.rows() + r, c) = bottom.at(r, c);
    return out;
  }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!K_.eq(a_[i], o.a_[i])) return false;
    return true;
  }

 private:
  static const F& default_field() {
    static const F K = [] {
      if constexpr (std::is_same_v<F, PrimeField>) return F(2);
      else return F();
    }();
    return K;
  }

  F K_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
  Mat<F> r;                         // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
  std::size_t rank = 0;
};

// Generic in-place elimination; reference path for every field.
template <class F>
RrefResult<F> rref_generic(const Mat<F>& m) {
  const F& K = m.field();
  Mat<F> r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < r.rows() && K.is_zero(r.at(sel, col))) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead) {
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(sel, c), r.at(lead, c));
    }
    typename F::Elem piv_inv = K.inv(r.at(lead, col));
    if (!K.eq(piv_inv, K.one())) {
      for (std::size_t c = col; c < r.cols(); ++c) r.at(lead, c) = K.mul(r.at(lead, c), piv_inv);
    }
    for (std::size_t k = 0; k < r.rows(); ++k) {
      if (k == lead || K.is_zero(r.at(k, col))) continue;
      typename F::Elem f = r.at(k, col);
      for (std::size_t c = col; c < r.cols(); ++c) {
        r.at(k, c) = K.sub(r.at(k, c), K.mul(f, r.at(lead, c)));
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  std::size_t rank = pivots.size();
  return {std::move(r), std::move(pivots), rank};
}

namespace detail {

inline RrefResult<PrimeField> rref_gf2(const Mat<PrimeField>& m) {
  const PrimeField& K = m.field();
  std::size_t nw = gf2::words_for(m.cols());
  std::vector<std::vector<gf2::Word>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r].assign(nw, 0);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) & 1) gf2::flip_bit(rows[r], c);
    }
  }
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && !gf2::get_bit(rows[sel], col)) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead) std::swap(rows[sel], rows[lead]);
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (k != lead && gf2::get_bit(rows[k], col)) gf2::xor_rows(rows[k], rows[lead]);
    }
    pivots.push_back(col);
    ++lead;
  }
  Mat<PrimeField> out(K, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = gf2::get_bit(rows[r], c) ? 1 : 0;
  std::size_t rank = pivots.size();
  return {std::move(out), std::move(pivots), rank};
}

}  // namespace detail

template <class F>
RrefResult<F> rref(const Mat<F>& m) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (m.field().modulus() == 2) return detail::rref_gf2(m);
  }
  return rref_generic(m);
}

// A subspace of K^ambient held as the unique RREF basis of its row space.
template <class F>
struct Subspace {
  using Elem = typename F::Elem;

  std::size_t ambient = 0;
  Mat<F> basis;                     // dim × ambient, RREF, no zero rows
  std::vector<std::size_t> pivots;  // strictly increasing

  std::size_t dim() const { return basis.rows(); }
  const F& field() const { return basis.field(); }

  static Subspace zero_space(const F& K, std::size_t ambient) {
    return {ambient, Mat<F>(K, 0, ambient), {}};
  }

  static Subspace full_space(const F& K, std::size_t ambient) {
    Subspace s{ambient, Mat<F>::identity(K, ambient), {}};
    s.pivots.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots[i] = i;
    return s;
  }

  static Subspace row_space(const Mat<F>& m) {
    RrefResult<F> rr = rref(m);
    Subspace s{m.cols(), Mat<F>(m.field(), rr.rank, m.cols()), std::move(rr.pivots)};
    for (std::size_t r = 0; r < rr.rank; ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) s.basis.at(r, c) = rr.r.at(r, c);
    return s;
  }

  // residue of v modulo this subspace (pivot coordinates eliminated)
  std::vector<Elem> reduce(std::vector<Elem> v) const {
    const F& K = field();
    if (v.size() != ambient) throw Error("subspace reduce: ambient mismatch");
    for (std::size_t r = 0; r < dim(); ++r) {
      const Elem& c = v[pivots[r]];
      if (K.is_zero(c)) continue;
      Elem f = c;
      for (std::size_t j = pivots[r]; j < ambient; ++j) {
        if (!K.is_zero(basis.at(r, j))) v[j] = K.sub(v[j], K.mul(f, basis.at(r, j)));
      }
    }
    return v;
  }

  bool contains(std::span<const Elem> v) const {
    std::vector<Elem> tmp(v.begin(), v.end());
    tmp = reduce(std::move(tmp));
    const F& K = field();
    for (const Elem& e : tmp)
      if (!K.is_zero(e)) return false;
    return true;
  }

  bool same_space(const Subspace& o) const {
    // RREF bases are unique per subspace
    return ambient == o.ambient && basis == o.basis;
  }
};

template <class F>
Subspace<F> kernel_basis(const Mat<F>& m) {
  const F& K = m.field();
  RrefResult<F> rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::size_t kdim = m.cols() - rr.rank;
  Mat<F> rows(K, kdim, m.cols());
  std::size_t out = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    rows.at(out, f) = K.one();
    for (std::size_t r = 0; r < rr.rank; ++r) rows.at(out, rr.pivots[r]) = K.neg(rr.r.at(r, f));
    ++out;
  }
  return Subspace<F>::row_space(rows);  // canonicalize
}

template <class F>
std::size_t span_union_dim(const Subspace<F>& a, const Subspace<F>& b) {
  require_same_field(a.field().spec(), b.field().spec());
  if (a.ambient != b.ambient) throw Error("span_union_dim: ambient mismatch");
  return rref(Mat<F>::vstack(a.basis, b.basis)).rank;
}

template <class F>
std::size_t quotient_dim(std::size_t ambient, const Subspace<F>& s) {
  if (s.ambient != ambient) throw Error("quotient_dim: ambient mismatch");
  return ambient - s.dim();
}

// Incremental RREF accumulator: feed rows one at a time, e.g. rows produced
// by a generator sweep that would be wasteful to materialize as one matrix.
template <class F>
class RowAccumulator {
 public:
  using Elem = typename F::Elem;

  RowAccumulator(const F& K, std::size_t ncols) : K_(K), ncols_(ncols) {}

  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  bool add(std::span<const Elem> row) {
    std::vector<Elem> v(row.begin(), row.end());
    return add_owned(std::move(v));
  }

  bool add_sparse(std::span<const std::pair<std::uint32_t, Elem>> entries) {
    std::vector<Elem> v(ncols_, K_.zero());
    for (const auto& [i, c] : entries) v[i] = K_.add(v[i], c);
    return add_owned(std::move(v));
  }

  bool contains(std::span<const Elem> row) const {
    std::vector<Elem> v(row.begin(), row.end());
    reduce_in_place(v);
    for (const Elem& e : v)
      if (!K_.is_zero(e)) return false;
    return true;
  }

  Subspace<F> to_subspace() const {
    Mat<F> b(K_, rows_.size(), ncols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < ncols_; ++c) b.at(r, c) = rows_[r][c];
    std::vector<std::size_t> piv(pivots_.begin(), pivots_.end());
    return {ncols_, std::move(b), std::move(piv)};
  }

 private:
  void reduce_in_place(std::vector<Elem>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem& c = v[pivots_[r]];
      if (K_.is_zero(c)) continue;
      Elem f = c;
      const std::vector<Elem>& row = rows_[r];
      for (std::size_t j = pivots_[r]; j < ncols_; ++j) {
        if (!K_.is_zero(row[j])) v[j] = K_.sub(v[j], K_.mul(f, row[j]));
      }
    }
  }

  bool add_owned(std::vector<Elem> v) {
    if (v.size() != ncols_) throw Error("row accumulator: length mismatch");
    reduce_in_place(v);
    std::size_t piv = ncols_;
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (!K_.is_zero(v[j])) {
        piv = j;
        break;
      }
    }
    if (piv == ncols_) return false;
    Elem f = K_.inv(v[piv]);
    if (!K_.eq(f, K_.one())) {
      for (std::size_t j = piv; j < ncols_; ++j) v[j] = K_.mul(v[j], f);
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Elem c = rows_[r][piv];
      if (K_.is_zero(c)) continue;
      for (std::size_t j = piv; j < ncols_; ++j) {
        if (!K_.is_zero(v[j])) rows_[r][j] = K_.sub(rows_[r][j], K_.mul(c, v[j]));
      }
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
  }

  F K_;
  std::size_t ncols_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

// Canonical projection K^ambient -> K^ambient / sub, realized on the
// non-pivot coordinates of the subspace being divided out.
template <class F>
struct QuotientMap {
  using Elem = typename F::Elem;

  Subspace<F> sub;
  std::vector<std::size_t> coords;  // free coordinates, ascending

  static QuotientMap mod(Subspace<F> s) {
    QuotientMap q{std::move(s), {}};
    std::vector<bool> is_pivot(q.sub.ambient, false);
    for (std::size_t p : q.sub.pivots) is_pivot[p] = true;
    for (std::size_t i = 0; i < q.sub.ambient; ++i) {
      if (!is_pivot[i]) q.coords.push_back(i);
    }
    return q;
  }

  std::size_t dim() const { return coords.size(); }

  std::vector<Elem> apply(std::span<const Elem> v) const {
    std::vector<Elem> red = sub.reduce(std::vector<Elem>(v.begin(), v.end()));
    std::vector<Elem> out;
    out.reserve(coords.size());
    for (std::size_t c : coords) out.push_back(red[c]);
    return out;
  }
};

}  // namespace stlie
