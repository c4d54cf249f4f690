#pragma once

namespace hirenet {

inline constexpr const char* kToolVersion = "hirenet 0.1.0";

} // namespace hirenet
