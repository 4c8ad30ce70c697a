#include "rmscd/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace rmscd {

std::string format_double(double v) {
    if (v == 0.0) return "0";
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace rmscd
