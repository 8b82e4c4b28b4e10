#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "probelag/chrono.hpp"
#include "probelag/speed_series.hpp"

namespace probelag {

// One re-identification event at a roadside sensor. device_id is an opaque
// pre-hashed identifier; this code never sees raw MAC addresses.
struct Detection {
  std::string sensor_id;
  std::string device_id;
  Instant timestamp{};
};

// One matched passage between the two sensors bounding a segment.
struct TravelTimeSample {
  std::string segment_id;
  Instant start_time{};
  double duration_s = 0.0;
};

struct Segment {
  std::string segment_id;
  std::string state;
  std::string road;
  double length_mi = 0.0;
  int utc_offset_min = 0;
  std::string timezone;  // as written in the metadata file
};

struct MatchStats {
  std::size_t matched = 0;
  std::size_t unmatched_upstream = 0;
  std::size_t unmatched_downstream = 0;
};

// Greedy earliest-forward matching per device: each upstream detection pairs
// with the earliest strictly later unmatched downstream detection of the same
// device within max_tt_s. Detections participate in at most one pair; the
// result is independent of input ordering. Unmatched detections are dropped
// and tallied into `stats` when given.
std::vector<TravelTimeSample> match_detections(
    const std::string& segment_id, std::span<const Detection> upstream,
    std::span<const Detection> downstream, double max_tt_s,
    MatchStats* stats = nullptr);

// Rolling median +- k*MAD filter on durations, over samples whose start time
// lies within +-window_min/2 minutes. When the window's MAD is zero only
// exact-median samples are retained.
std::vector<TravelTimeSample> filter_outliers(
    std::span<const TravelTimeSample> samples, int window_min, double k);

// speed = length / (duration/3600) mph, attributed to the passage midpoint.
// Throws OutOfRangeError when a sample implies a speed outside (0, 120].
std::vector<SpeedSample> to_speed_samples(
    std::span<const TravelTimeSample> samples, const Segment& segment);

}  // namespace probelag
