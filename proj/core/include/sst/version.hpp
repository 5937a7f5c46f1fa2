#pragma once

#include <string_view>

namespace sst {

inline constexpr std::string_view version = "0.1.0";

}  // namespace sst
