#pragma once

#include <cstdio>
#include <string>

namespace cylhardy {

// Shortest-faithful float formatting shared by every text output path so
// identical runs stay byte-identical.
inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace cylhardy
