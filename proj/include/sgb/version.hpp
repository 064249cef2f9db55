#ifndef SGB_VERSION_HPP
#define SGB_VERSION_HPP

namespace sgb {

inline constexpr const char* kToolName = "sgb";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace sgb

#endif
