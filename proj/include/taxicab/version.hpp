#pragma once

namespace taxicab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace taxicab
