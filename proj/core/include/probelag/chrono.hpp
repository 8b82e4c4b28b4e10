#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace probelag {

// All series arithmetic happens on the UTC minute grid; local wall-clock time
// only matters for date attribution and the AM/PM split, and is recovered by
// applying a fixed UTC offset in minutes.
using Instant = std::chrono::sys_seconds;
using Minute = std::chrono::sys_time<std::chrono::minutes>;
using Date = std::chrono::year_month_day;

inline Minute floor_minute(Instant t) {
  return std::chrono::floor<std::chrono::minutes>(t);
}

inline Instant to_instant(Minute m) {
  return std::chrono::time_point_cast<std::chrono::seconds>(m);
}

inline bool minute_aligned(Instant t) {
  return to_instant(floor_minute(t)) == t;
}

// Civil date of `t` as seen on a clock running `utc_offset_min` ahead of UTC.
Date local_date(Instant t, int utc_offset_min);

// Minutes past local midnight, in [0, 1440).
int local_minute_of_day(Minute m, int utc_offset_min);

// UTC minute at local midnight of `d`.
Minute day_origin(Date d, int utc_offset_min);

struct ParsedTimestamp {
  Instant utc{};
  int utc_offset_min = 0;
};

// "YYYY-MM-DDTHH:MM:SS±HH:MM" (or trailing "Z").
std::optional<ParsedTimestamp> try_parse_iso_timestamp(std::string_view s);
std::string format_iso_timestamp(Instant utc, int utc_offset_min);
std::string format_iso_minute(Minute m, int utc_offset_min);

// "YYYY-MM-DD".
std::optional<Date> try_parse_date(std::string_view s);
std::string format_date(Date d);

// "UTC", "Z" or "±HH:MM", as minutes east of UTC.
std::optional<int> try_parse_utc_offset(std::string_view s);
std::string format_utc_offset(int utc_offset_min);

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);
std::optional<double> try_parse_double(std::string_view s);
std::optional<std::int64_t> try_parse_int(std::string_view s);

}  // namespace probelag
