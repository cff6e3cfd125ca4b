#ifndef REESTYPE_VERSION_HPP
#define REESTYPE_VERSION_HPP

namespace reestype {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
