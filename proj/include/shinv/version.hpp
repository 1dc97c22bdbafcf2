#pragma once

namespace shinv {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace shinv
