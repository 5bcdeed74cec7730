#pragma once

namespace raysplit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace raysplit
