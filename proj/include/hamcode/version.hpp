#pragma once

namespace hamcode {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace hamcode
