#pragma once

namespace hydro {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kFieldFormat = "HSF1 v1";

}  // namespace hydro
