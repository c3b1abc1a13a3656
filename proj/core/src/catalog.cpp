#include "stlie/catalog.hpp"

namespace stlie {

namespace {

template <class F>
std::vector<typename KAlgebra<F>::Vec> zero_table(const F& K, std::size_t dim) {
  return std::vector<typename KAlgebra<F>::Vec>(
      dim * dim, typename KAlgebra<F>::Vec(dim, K.zero()));
}

// base field as a one-dimensional algebra
template <class F>
KAlgebra<F> field_algebra(const F& K) {
  auto t = zero_table(K, 1);
  t[0][0] = K.one();
  return KAlgebra<F>(K, {"1"}, 0, std::move(t));
}

// K[x]/(x^2)
template <class F>
KAlgebra<F> dual_numbers(const F& K) {
  auto t = zero_table(K, 2);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { t[i * 2 + j][k] = K.one(); };
  set(0, 0, 0);  // 1*1 = 1
  set(0, 1, 1);  // 1*x = x
  set(1, 0, 1);  // x*1 = x
  // x*x = 0
  return KAlgebra<F>(K, {"1", "x"}, 0, std::move(t));
}

// group algebra K[C3], basis {1, g, g^2}
template <class F>
KAlgebra<F> group_c3(const F& K) {
  auto t = zero_table(K, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i * 3 + j][(i + j) % 3] = K.one();
  return KAlgebra<F>(K, {"1", "g", "g2"}, 0, std::move(t));
}

// Characteristic-2 Weyl quotient: basis {1, x, y, xy}, x^2 = y^2 = 0,
// yx = xy + 1.  Finite-dimensional stand-in for the Weyl algebra in char 2;
// its key feature is 1 in [R,R].
KAlgebra<PrimeField> weyl_trunc_f2() {
  PrimeField K(2);
  auto t = zero_table(K, 4);
  auto set = [&](std::size_t i, std::size_t j, std::initializer_list<std::size_t> ks) {
    for (std::size_t k : ks) t[i * 4 + j][k] = K.one();
  };
  // indices: 0 = 1, 1 = x, 2 = y, 3 = xy
  for (std::size_t i = 0; i < 4; ++i) {
    set(0, i, {i});
    if (i != 0) set(i, 0, {i});
  }
  set(1, 2, {3});     // x*y  = xy
  set(2, 1, {3, 0});  // y*x  = xy + 1
  set(2, 3, {2});     // y*xy = y
  set(3, 1, {1});     // xy*x = x
  set(3, 3, {3});     // xy*xy = xy
  // x*x = y*y = x*xy = xy*y = 0
  return KAlgebra<PrimeField>(K, {"1", "x", "y", "xy"}, 0, std::move(t));
}

// M2(F2), basis {e11, e12, e21, e22}; algebra unit e11 + e22 is not a basis
// element, so adjoin the unit as basis element 0 instead: basis
// {1, e12, e21, e22} with e11 = 1 - e22.
KAlgebra<PrimeField> mat2_f2() {
  PrimeField K(2);
  // work in the natural matrix-unit basis first
  auto unit_mul = [](std::size_t a, std::size_t b, std::size_t c, std::size_t d)
      -> std::pair<bool, std::pair<std::size_t, std::size_t>> {
    if (b != c) return {false, {0, 0}};
    return {true, {a, d}};
  };
  // change of basis: f0 = e11 + e22 (=1), f1 = e12, f2 = e21, f3 = e22
  // so e11 = f0 + f3 (char 2), e12 = f1, e21 = f2, e22 = f3.
  auto to_f = [&](std::size_t a, std::size_t d, std::vector<PrimeField::Elem>& out) {
    // adds matrix unit e_{a,d} (0-based) expressed in the f-basis
    if (a == 0 && d == 0) {
      out[0] ^= 1;
      out[3] ^= 1;
    } else if (a == 0 && d == 1) {
      out[1] ^= 1;
    } else if (a == 1 && d == 0) {
      out[2] ^= 1;
    } else {
      out[3] ^= 1;
    }
  };
  // f-basis elements as matrix units: list of (a,d) pairs (char 2 sums)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> f_as_units = {
      {{0, 0}, {1, 1}}, {{0, 1}}, {{1, 0}}, {{1, 1}}};
  auto t = zero_table(K, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      std::vector<PrimeField::Elem> prod(4, 0);
      for (auto [a, b] : f_as_units[i]) {
        for (auto [c, d] : f_as_units[j]) {
          auto [nz, ad] = unit_mul(a, b, c, d);
          if (nz) to_f(ad.first, ad.second, prod);
        }
      }
      t[i * 4 + j] = prod;
    }
  }
  return KAlgebra<PrimeField>(K, {"1", "e12", "e21", "e22"}, 0, std::move(t));
}

std::vector<CatalogEntry> build_catalog() {
  PrimeField F2(2), F3(3);
  RationalField Q;
  std::vector<CatalogEntry> out;
  out.push_back({"F2", "prime field F_2", field_algebra(F2)});
  out.push_back({"F3", "prime field F_3", field_algebra(F3)});
  out.push_back({"Q", "field of rationals", field_algebra(Q)});
  out.push_back({"dual-F2", "dual numbers F_2[x]/(x^2)", dual_numbers(F2)});
  out.push_back({"dual-F3", "dual numbers F_3[x]/(x^2)", dual_numbers(F3)});
  out.push_back({"dual-Q", "dual numbers Q[x]/(x^2)", dual_numbers(Q)});
  out.push_back({"group-F3C3", "group algebra F_3[C_3]", group_c3(F3)});
  out.push_back({"weyl-F2", "char-2 Weyl quotient W1/(x^2,y^2)", weyl_trunc_f2()});
  out.push_back({"mat2-F2", "matrix algebra M_2(F_2)", mat2_f2()});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry* find_builtin(std::string_view name) {
  for (const CatalogEntry& e : builtin_catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace stlie
