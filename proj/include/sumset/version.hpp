#ifndef SUMSET_VERSION_HPP
#define SUMSET_VERSION_HPP

namespace sumset {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
