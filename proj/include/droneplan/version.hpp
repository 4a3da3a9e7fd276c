#pragma once

namespace droneplan {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace droneplan
