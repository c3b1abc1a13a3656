#pragma once

// Combinatorics on the 24 quadruples (i,j,k,l) with {i,j,k,l} = {1,2,3,4}:
// the partition into six 4-element blocks induced by the left cosets of
// H = {(1), (13), (24), (13)(24)} in S_4, the block index map theta, and the
// +/-1 correction needed on the two blocks P5, P6 singled out by the (2,2)
// grading.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "stlie/check_report.hpp"

namespace stlie {

struct Quad {
  std::array<std::uint8_t, 4> v{};  // entries are 1..4, pairwise distinct

  auto operator<=>(const Quad&) const = default;
  std::uint8_t operator[](std::size_t i) const { return v[i]; }
  std::string str() const;
};

class QuadIndexTables {
 public:
  static const QuadIndexTables& instance();  // shared immutable tables
  static QuadIndexTables build();

  int theta(const Quad& q) const;
  int sign_of(const Quad& q) const;  // +1 or -1

  const std::vector<Quad>& block(int m) const { return blocks_[static_cast<std::size_t>(m - 1)]; }
  const std::vector<Quad>& all_quads() const { return all_; }

  // copy with one sign entry flipped; exists so tests can plant a corrupted
  // table and watch the cocycle sweep reject it
  QuadIndexTables with_sign_flipped(const Quad& q) const;

 private:
  std::vector<Quad> all_;
  std::array<std::vector<Quad>, 6> blocks_;
  std::map<Quad, int> theta_;
  std::map<Quad, int> sign_;
};

// For the (2,2) grading, P5 and P6 are exactly the quadruples with
// omega(i) = omega(k); the property is constant on blocks.
CheckReport classify_P5_P6(const QuadIndexTables& t);

}  // namespace stlie
