#pragma once

#include <string_view>

namespace stlie {

inline constexpr std::string_view kToolName = "stlie";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace stlie
