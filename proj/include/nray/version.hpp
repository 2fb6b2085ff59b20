#pragma once

namespace nray {
inline constexpr const char* kVersion = "0.1.0";
}
