#pragma once

namespace ramcover {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ramcover
