#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stlie/kalgebra.hpp"

namespace stlie {

// Coefficient algebras live over either F_p or Q; a variant lets runtime
// callers (CLI, report generator) dispatch into the templated pipelines.
using AnyAlgebra = std::variant<KAlgebra<PrimeField>, KAlgebra<RationalField>>;

struct CatalogEntry {
  std::string name;         // CLI handle, shell-safe
  std::string description;  // mathematical description
  AnyAlgebra algebra;
};

// Built-in coefficient algebras; constructed once, validated on construction.
const std::vector<CatalogEntry>& builtin_catalog();

const CatalogEntry* find_builtin(std::string_view name);

inline FieldSpec algebra_field(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return alg.field().spec(); }, a);
}

inline std::size_t algebra_dim(const AnyAlgebra& a) {
  return std::visit([](const auto& alg) { return alg.dim(); }, a);
}

}  // namespace stlie
