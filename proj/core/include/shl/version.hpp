#pragma once

namespace shl {

inline constexpr const char* kVersion = "shl 0.1.0";

}  // namespace shl
