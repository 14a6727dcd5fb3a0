#pragma once

namespace ks {
inline constexpr const char* kToolName = "ksol";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;
}  // namespace ks
