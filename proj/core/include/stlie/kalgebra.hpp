#pragma once

// Finite-dimensional unital associative K-algebras given by a basis (which
// must contain 1) and a multiplication tensor.  Construction validates the
// unit law and associativity over all basis triples.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stlie/errors.hpp"
#include "stlie/field.hpp"
#include "stlie/linalg.hpp"

namespace stlie {

template <class F>
struct IdealData {
  unsigned long long m = 0;
  Subspace<F> span;
  std::size_t quotient_dim = 0;
};

template <class F>
class KAlgebra {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;  // element coordinates over the basis

  KAlgebra(F K, std::vector<std::string> labels, std::size_t unit_index,
           std::vector<Vec> table)
      : K_(std::move(K)),
        labels_(std::move(labels)),
        unit_(unit_index),
        table_(std::move(table)) {
    dim_ = labels_.size();
    if (dim_ == 0) throw InvalidAlgebraError("algebra needs at least one basis element");
    if (unit_ >= dim_) throw InvalidAlgebraError("unit index out of range");
    if (table_.size() != dim_ * dim_)
      throw InvalidAlgebraError("multiplication table must have dim*dim entries");
    for (const Vec& v : table_) {
      if (v.size() != dim_)
        throw InvalidAlgebraError("multiplication table entry of wrong length");
    }
    validate_unit_law();
    validate_associativity();
  }

  const F& field() const { return K_; }
  std::size_t dim() const { return dim_; }
  std::size_t unit_index() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  // coordinates of r_i * r_j
  const Vec& table(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Vec zero_element() const { return Vec(dim_, K_.zero()); }
  Vec basis_element(std::size_t i) const {
    Vec v = zero_element();
    v[i] = K_.one();
    return v;
  }
  Vec unit_element() const { return basis_element(unit_); }

  Vec add(const Vec& a, const Vec& b) const {
    check_len(a);
    check_len(b);
    Vec out(dim_, K_.zero());
    for (std::size_t i = 0; i < dim_; ++i) out[i] = K_.add(a[i], b[i]);
    return out;
  }

  Vec sub(const Vec& a, const Vec& b) const {
    check_len(a);
    check_len(b);
    Vec out(dim_, K_.zero());
    for (std::size_t i = 0; i < dim_; ++i) out[i] = K_.sub(a[i], b[i]);
    return out;
  }

  Vec scale(const Elem& c, const Vec& a) const {
    check_len(a);
    Vec out(dim_, K_.zero());
    for (std::size_t i = 0; i < dim_; ++i) out[i] = K_.mul(c, a[i]);
    return out;
  }

  Vec mul(const Vec& a, const Vec& b) const {
    check_len(a);
    check_len(b);
    Vec out(dim_, K_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (K_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (K_.is_zero(b[j])) continue;
        Elem c = K_.mul(a[i], b[j]);
        const Vec& t = table(i, j);
        for (std::size_t k = 0; k < dim_; ++k) {
          if (!K_.is_zero(t[k])) out[k] = K_.add(out[k], K_.mul(c, t[k]));
        }
      }
    }
    return out;
  }

  Vec commutator(const Vec& a, const Vec& b) const { return sub(mul(a, b), mul(b, a)); }

  bool is_zero_vec(const Vec& a) const {
    for (const Elem& e : a)
      if (!K_.is_zero(e)) return false;
    return true;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!(table(i, j) == table(j, i))) return false;
    return true;
  }

  // K-span of all commutators of basis elements
  Subspace<F> commutator_span() const {
    RowAccumulator<F> acc(K_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        Vec c = sub(table(i, j), table(j, i));
        acc.add(c);
      }
    }
    return acc.to_subspace();
  }

  // Two-sided ideal generated by {m*r_i} and {r_i r_j - r_j r_i}, computed as
  // a fixpoint closure under basis multiplication on both sides.  The
  // closure is then compared against the one-sided span m*R + R*[R,R]; they
  // must agree, and the computation refuses to continue if they do not.
  IdealData<F> ideal_Im(unsigned long long m) const {
    RowAccumulator<F> acc(K_, dim_);
    std::vector<Vec> work;
    Elem scalar_m = K_.from_int(static_cast<long long>(m));
    auto feed = [&](Vec v) {
      if (acc.add(v)) work.push_back(std::move(v));
    };
    for (std::size_t i = 0; i < dim_; ++i) feed(scale(scalar_m, basis_element(i)));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) feed(sub(table(i, j), table(j, i)));
    while (!work.empty()) {
      Vec v = std::move(work.back());
      work.pop_back();
      for (std::size_t k = 0; k < dim_; ++k) {
        Vec b = basis_element(k);
        feed(mul(b, v));
        feed(mul(v, b));
      }
    }
    Subspace<F> fix = acc.to_subspace();

    RowAccumulator<F> one_sided(K_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) one_sided.add(scale(scalar_m, basis_element(i)));
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        Vec c = sub(table(i, j), table(j, i));
        one_sided.add(c);
        for (std::size_t k = 0; k < dim_; ++k) one_sided.add(mul(basis_element(k), c));
      }
    }
    if (one_sided.rank() != fix.dim()) {
      throw InconsistentAlgebraError(
          "ideal closure disagrees with m*R + R*[R,R] (rank " +
          std::to_string(one_sided.rank()) + " vs " + std::to_string(fix.dim()) + ")");
    }
    std::size_t q = dim_ - fix.dim();
    return {m, std::move(fix), q};
  }

  std::string describe() const {
    return "dim " + std::to_string(dim_) + " over " + K_.spec().name();
  }

 private:
  void check_len(const Vec& v) const {
    if (v.size() != dim_) throw Error("algebra element has wrong length");
  }

  void validate_unit_law() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      Vec e = basis_element(i);
      if (!(table(unit_, i) == e) || !(table(i, unit_) == e)) {
        throw InvalidAlgebraError("unit law fails at basis element '" + labels_[i] + "'");
      }
    }
  }

  void validate_associativity() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) {
          Vec left = mul(table(i, j), basis_element(k));
          Vec right = mul(basis_element(i), table(j, k));
          if (!(left == right)) {
            throw InvalidAlgebraError("associativity fails at (" + labels_[i] + ", " +
                                      labels_[j] + ", " + labels_[k] + ")");
          }
        }
      }
    }
  }

  F K_;
  std::vector<std::string> labels_;
  std::size_t unit_ = 0;
  std::size_t dim_ = 0;
  std::vector<Vec> table_;
};

template <class F>
KAlgebra<F> make_algebra(F K, std::vector<std::string> labels, std::size_t unit_index,
                         std::vector<typename KAlgebra<F>::Vec> table) {
  return KAlgebra<F>(std::move(K), std::move(labels), unit_index, std::move(table));
}

}  // namespace stlie
