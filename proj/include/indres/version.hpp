#pragma once

namespace indres {
inline constexpr const char* kVersion = "0.1.0";
}
