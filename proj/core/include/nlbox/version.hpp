#pragma once

namespace nlbox {

inline constexpr const char* kVersion = "0.1.0";

} // namespace nlbox
