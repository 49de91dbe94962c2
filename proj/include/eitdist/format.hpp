#pragma once

#include <cstdio>
#include <string>

namespace eitdist {

/// Fixed float formatting used by all text output: 17 significant digits,
/// '.' decimal separator, locale independent.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace eitdist
