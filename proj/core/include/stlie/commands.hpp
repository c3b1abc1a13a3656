#pragma once

// Implementations behind the CLI subcommands, kept in the library so tests
// can drive them directly.  Exit codes: 0 success, 1 a mathematical check
// failed, 2 usage or input error.

#include <iosfwd>
#include <optional>
#include <string>

#include "stlie/catalog.hpp"
#include "stlie/reproduce.hpp"

namespace stlie {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMathFail = 1;
inline constexpr int kExitUsage = 2;

int cmd_catalog(std::ostream& out);

int cmd_hom2(const AnyAlgebra& algebra, const std::string& name, std::size_t m, std::size_t n,
             std::size_t budget, std::ostream& out);

// kase: "3,1" or "2,2"
int cmd_cocycle_check(const AnyAlgebra& algebra, const std::string& name,
                      const std::string& kase, std::ostream& out);

int cmd_reproduce(const ReproduceOptions& opts, const std::optional<std::string>& out_path,
                  std::ostream& out);

}  // namespace stlie
