#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace tswarp {

/// Shortest decimal representation that parses back to the identical
/// 64-bit value. Used for CLI output and CSV cells.
[[nodiscard]] inline std::string format_double(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace tswarp
