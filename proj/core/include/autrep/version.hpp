#pragma once

namespace autrep {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace autrep
