#pragma once

#include <string>

namespace rmscd {

// Shortest decimal form that round-trips to the same double ("1", "0.5",
// "0.7846"). Deterministic, so serialized outputs are byte-stable.
std::string format_double(double v);

}  // namespace rmscd
