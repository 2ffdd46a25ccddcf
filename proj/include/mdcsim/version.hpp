#pragma once

namespace mdcsim {

inline constexpr const char* kToolName = "mdcsim";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace mdcsim
