#pragma once

namespace asq {

inline constexpr const char* kToolVersion = "asq 1.0.0";

}  // namespace asq
