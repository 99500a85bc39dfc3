#pragma once

namespace gcp {

inline constexpr const char* kVersion = "0.1.0";

}
