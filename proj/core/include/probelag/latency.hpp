#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "probelag/chrono.hpp"
#include "probelag/episodes.hpp"
#include "probelag/speed_series.hpp"

namespace probelag {

// Integer minute shifts to scan, inclusive on both ends; must bracket zero.
struct ShiftBounds {
  int k_min = -5;
  int k_max = 20;
};

enum class Period { kSre, kSp, kRp };

std::string_view to_string(Period p);
std::optional<Period> period_from_string(std::string_view s);

enum LatencyFlags : unsigned {
  kCorUndefined = 1u << 0,    // correlation had zero variance at every shift
  kBoundaryOptimum = 1u << 1, // some chosen shift sits on a search bound
};

std::string format_latency_flags(unsigned flags);
unsigned parse_latency_flags(const std::string& text);

// The optimal probe shift for one (episode, vendor, period) under each
// fitness function, plus their mean. episode_start identifies the episode the
// row belongs to (several episodes may share a date).
struct LatencyResult {
  std::string segment_id;
  std::string vendor_id;
  Date date{};
  Minute episode_start{};
  int utc_offset_min = 0;
  Period period = Period::kSre;
  int shift_avd = 0;
  int shift_svd = 0;
  std::optional<int> shift_cor;
  double mean_latency = 0.0;
  int overlap_count = 0;  // fewest co-present minutes over the evaluated shifts
  unsigned flags = 0;
};

// Sum of absolute speed differences over co-present minutes.
// Throws InsufficientOverlapError when no minute is co-present.
double fitness_avd(const SpeedSeries& ref, const SpeedSeries& probe);

// Sum of squared speed differences over co-present minutes.
double fitness_svd(const SpeedSeries& ref, const SpeedSeries& probe);

// Pearson correlation over co-present minutes; nullopt when either side has
// zero variance. Throws InsufficientOverlapError below 3 co-present minutes.
std::optional<double> fitness_cor(const SpeedSeries& ref,
                                  const SpeedSeries& probe);

// shifted(t) = probe(t + k): evaluating a window against the shifted probe at
// positive k tests "probe lags reference by k minutes".
SpeedSeries shift_probe(const SpeedSeries& probe, int k);

// Scan every shift in `bounds` over the episode window for `period`
// ([sp_start, transition) for SP, [transition, rp_end) for RP, the full
// [sp_start, rp_end) for SRE), minimizing AVD/SVD and maximizing COR. Ties
// prefer the smallest |k|, then the smaller k. Throws WindowTooShortError for
// windows under 10 minutes and InsufficientOverlapError when any evaluated
// shift has fewer than min_overlap_frac * window co-present minutes.
LatencyResult measure_latency(const SpeedSeries& ref, const SpeedSeries& probe,
                              const Episode& episode, Period period,
                              ShiftBounds bounds,
                              double min_overlap_frac = 0.8);

}  // namespace probelag
