#pragma once

namespace coulomb2d {

inline constexpr const char* version_string = "0.1.0";

}  // namespace coulomb2d
