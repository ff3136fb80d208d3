#pragma once

#include <string>

namespace sawp {

// Formats a double with 9 significant digits (%.9g), the fixed width used by
// every serialized artifact. Negative zero collapses to "0".
std::string format_number(double v);

} // namespace sawp
