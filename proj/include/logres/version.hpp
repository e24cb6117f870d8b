/// @file version.hpp
/// @brief Tool identity, shared by the report schema and the CLI.

#pragma once

namespace logres {

inline constexpr const char* kToolName = "logres";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

} // namespace logres
