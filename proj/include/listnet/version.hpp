#pragma once

namespace listnet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace listnet
