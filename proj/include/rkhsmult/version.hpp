#pragma once

namespace rkhsmult {

inline constexpr const char* kToolName = "rkhsmult";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "1";
inline constexpr const char* kConfigSchemaVersion = "1";

}  // namespace rkhsmult
