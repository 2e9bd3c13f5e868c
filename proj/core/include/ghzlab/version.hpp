#pragma once

namespace ghzlab {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace ghzlab
