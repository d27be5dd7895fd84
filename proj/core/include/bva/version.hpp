#pragma once

namespace bva {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bva
