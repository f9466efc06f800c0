#pragma once

namespace flowse {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace flowse
