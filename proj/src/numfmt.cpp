#include "sawp/numfmt.hpp"

#include <cstdio>

namespace sawp {

std::string format_number(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

} // namespace sawp
