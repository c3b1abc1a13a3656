#include "stlie/gf2.hpp"

#include <algorithm>
#include <bit>

namespace stlie::gf2 {

std::size_t first_set_bit(std::span<const Word> row) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    if (row[w] != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(row[w]));
  }
  return npos;
}

Accumulator::Accumulator(std::size_t ncols) : ncols_(ncols), nwords_(words_for(ncols)) {}

void Accumulator::reduce_in_place(std::span<Word> row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (get_bit(row, pivots_[r])) xor_rows(row, rows_[r]);
  }
}

bool Accumulator::add_packed(std::vector<Word> row) {
  reduce_in_place(row);
  std::size_t piv = first_set_bit(row);
  if (piv == npos) return false;
  // clear the new pivot column in the existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (get_bit(rows_[r], piv)) xor_rows(rows_[r], row);
  }
  auto at = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<std::uint32_t>(piv));
  std::size_t pos = static_cast<std::size_t>(at - pivots_.begin());
  pivots_.insert(at, static_cast<std::uint32_t>(piv));
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
  return true;
}

bool Accumulator::add_indices(std::span<const std::uint32_t> ones) {
  std::vector<Word> row(nwords_, 0);
  for (std::uint32_t i : ones) flip_bit(row, i);
  return add_packed(std::move(row));
}

bool Accumulator::contains(std::span<const Word> row) const {
  std::vector<Word> tmp(row.begin(), row.end());
  reduce_in_place(tmp);
  return first_set_bit(tmp) == npos;
}

}  // namespace stlie::gf2
