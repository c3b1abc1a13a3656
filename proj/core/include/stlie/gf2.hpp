#pragma once

// Bit-packed GF(2) row operations: 64 matrix entries per machine word.
// Semantically interchangeable with the generic elimination over F_2; this
// representation exists purely for throughput on the large row sweeps.

#include <cstdint>
#include <span>
#include <vector>

namespace stlie::gf2 {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline bool get_bit(std::span<const Word> row, std::size_t i) {
  return (row[i >> 6] >> (i & 63)) & 1u;
}

inline void flip_bit(std::span<Word> row, std::size_t i) {
  row[i >> 6] ^= Word{1} << (i & 63);
}

inline void xor_rows(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

// index of the lowest set bit, or npos when the row is zero
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
std::size_t first_set_bit(std::span<const Word> row);

// Incremental reduced-echelon accumulator.  Rows are kept fully reduced and
// sorted by pivot, so the stored basis is the unique RREF of everything fed
// in so far.
class Accumulator {
 public:
  explicit Accumulator(std::size_t ncols);

  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  // Inserts a packed row (consumed).  Returns true when the rank grew.
  bool add_packed(std::vector<Word> row);

  // Builds a packed row with ones at the given column indices (an index
  // appearing twice cancels), then inserts it.
  bool add_indices(std::span<const std::uint32_t> ones);

  bool contains(std::span<const Word> row) const;

  const std::vector<std::vector<Word>>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

 private:
  void reduce_in_place(std::span<Word> row) const;

  std::size_t ncols_ = 0;
  std::size_t nwords_ = 0;
  std::vector<std::vector<Word>> rows_;   // pivot-sorted RREF rows
  std::vector<std::uint32_t> pivots_;     // strictly increasing
};

}  // namespace stlie::gf2
