#pragma once

#include <string>

namespace mdcoint {

// Locale-independent numeric formatting. Reports and CSV files must be
// byte-stable across runs, so all user-facing numbers go through these
// instead of iostreams.

/// Fixed-point with the given number of decimals ("1.2300").
std::string format_fixed(double value, int decimals);

/// Shortest representation that round-trips to the same double.
std::string format_shortest(double value);

}  // namespace mdcoint
