#pragma once

namespace pairguess {

inline constexpr const char* VERSION = "1.0.0";

}  // namespace pairguess
