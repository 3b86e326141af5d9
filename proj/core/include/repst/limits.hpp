#pragma once

#include <string_view>

namespace repst {

/// Enumeration caps. Defaults can be raised through the REPST_LIMITS
/// environment variable, e.g. REPST_LIMITS="partitions=60,sweep=50".
struct Limits {
  int partition_size = 40;  // enumerate_partitions(n)
  int sweep_n = 40;         // largest n in a verification or bound sweep
  int stirling_m = 12;      // largest degree in the gr C[S_t] table
  int series_degree = 24;   // largest truncation degree for Hilbert series
};

/// Parses "key=value,key=value" on top of `base`. Unknown keys or malformed
/// values throw repst::Error(InvalidArgument).
Limits parse_limits(std::string_view text, Limits base = {});

/// Process-wide limits, read once from REPST_LIMITS.
const Limits& limits();

}  // namespace repst
