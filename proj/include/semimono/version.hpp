#pragma once

#include <string_view>

namespace semimono {

inline constexpr std::string_view kToolName = "semimono";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace semimono
