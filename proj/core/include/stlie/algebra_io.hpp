#pragma once

// JSON algebra spec files:
// {
//   "field": {"kind": "Fp", "p": 2} | {"kind": "Q"},
//   "dim": 2,
//   "basis": ["1", "x"],
//   "unit": ["1", "0"],
//   "mult": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]]
// }
// Scalars are decimal integer strings; over Q, "a/b" fractions are accepted.
// mult[i][j] holds the coordinates of r_i * r_j.

#include <string>
#include <string_view>

#include "stlie/catalog.hpp"

namespace stlie {

AnyAlgebra parse_algebra_json(std::string_view text, std::string_view origin = "<string>");
AnyAlgebra load_algebra_file(const std::string& path);

// builtin name or spec file path, as taken on the command line
AnyAlgebra resolve_algebra(const std::string& builtin_name, const std::string& spec_path);

std::string algebra_to_json(const AnyAlgebra& a);

}  // namespace stlie
