#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "stlie/errors.hpp"

namespace stlie {

enum class FieldKind : std::uint8_t { prime_field, rationals };

// Largest admissible prime modulus; keeps products of two residues in 62 bits.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t p = 0;

  static FieldSpec prime_field(std::uint64_t p) { return {FieldKind::prime_field, p}; }
  static FieldSpec rationals() { return {FieldKind::rationals, 0}; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  std::string name() const;
};

void require_same_field(const FieldSpec& a, const FieldSpec& b);

// Z/pZ with canonical residues in [0, p).  Reduction uses a precomputed
// Barrett constant so elimination loops avoid hardware division.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime_field(p_); }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }

  // valid for x < 2^63
  Elem reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    return r;
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return reduce(a * b); }
  Elem inv(Elem a) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(std::string_view s) const;

 private:
  std::uint64_t p_ = 2;
  std::uint64_t barrett_ = 0;  // floor(2^64 / p)
};

// Exact rationals on top of GMP; mpq_class keeps fractions reduced with a
// positive denominator, which is exactly the canonical form required here.
class RationalField {
 public:
  using Elem = mpq_class;

  RationalField() = default;

  FieldSpec spec() const { return FieldSpec::rationals(); }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("division by zero in Q");
    return Elem(1) / a;
  }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  Elem parse(std::string_view s) const;
};

}  // namespace stlie
