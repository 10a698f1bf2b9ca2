#pragma once

namespace ffzeta {

inline constexpr const char* version_string = "0.1.0";
inline constexpr const char* tool_name = "ffzeta";

} // namespace ffzeta
