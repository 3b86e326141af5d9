#include "repst/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "repst/errors.hpp"

namespace repst {

Limits parse_limits(std::string_view text, Limits base) {
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;

    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "limit without '=': " + std::string(item));
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size() || parsed < 0) {
      throw Error(ErrorKind::InvalidArgument, "bad limit value: " + std::string(item));
    }
    if (key == "partitions") {
      base.partition_size = parsed;
    } else if (key == "sweep") {
      base.sweep_n = parsed;
    } else if (key == "stirling") {
      base.stirling_m = parsed;
    } else if (key == "degree") {
      base.series_degree = parsed;
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown limit: " + std::string(key));
    }
  }
  return base;
}

const Limits& limits() {
  static const Limits value = [] {
    const char* env = std::getenv("REPST_LIMITS");
    return env ? parse_limits(env) : Limits{};
  }();
  return value;
}

}  // namespace repst
