#pragma once

namespace dps {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dps
