#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "probelag/chrono.hpp"

namespace probelag {

// One pre-gridding observation: a speed seen at some instant on a segment.
struct SpeedSample {
  Instant timestamp{};
  double speed_mph = 0.0;
};

// Minute-gridded speeds for one (segment, source, local date). Slots form a
// strict 1-minute grid starting at `origin`; a NaN slot means MISSING. All
// present values are finite, positive and capped at kMaxSpeedMph. Instances
// are immutable after construction.
class SpeedSeries {
 public:
  static constexpr double kMaxSpeedMph = 120.0;
  static constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

  SpeedSeries(std::string segment_id, std::string source_id, Date date,
              int utc_offset_min, Minute origin, std::vector<double> slots);

  const std::string& segment_id() const noexcept { return segment_id_; }
  const std::string& source_id() const noexcept { return source_id_; }
  Date date() const noexcept { return date_; }
  int utc_offset_min() const noexcept { return utc_offset_min_; }

  Minute origin() const noexcept { return origin_; }
  // One minute past the last slot.
  Minute end() const noexcept {
    return origin_ + std::chrono::minutes(static_cast<long>(slots_.size()));
  }
  std::size_t size() const noexcept { return slots_.size(); }

  Minute time_at(std::size_t i) const {
    return origin_ + std::chrono::minutes(static_cast<long>(i));
  }
  bool present(std::size_t i) const { return !std::isnan(slots_[i]); }
  // Raw slot value; NaN when missing.
  double operator[](std::size_t i) const { return slots_[i]; }

  // Value at an absolute minute; nullopt outside the span or when missing.
  std::optional<double> at(Minute t) const;

  std::span<const double> slots() const noexcept { return slots_; }
  std::size_t present_count() const noexcept;
  std::vector<double> present_values() const;

  // Same metadata, different slot contents (sizes may differ).
  SpeedSeries with_slots(std::vector<double> slots) const;
  // Same slots relabelled to start at a different minute.
  SpeedSeries with_origin(Minute origin) const;

 private:
  std::string segment_id_;
  std::string source_id_;
  Date date_;
  int utc_offset_min_;
  Minute origin_;
  std::vector<double> slots_;
};

// Grid samples onto their minutes; each slot is the median of the samples
// flooring to it, and the series spans the first to the last observed minute.
// Throws EmptyInputError / OutOfRangeError.
SpeedSeries build_series(std::span<const SpeedSample> samples,
                         std::string segment_id, std::string source_id,
                         Date date, int utc_offset_min);

// Inclusive linear-interpolation percentile over an ascending-sorted range:
// rank r = (p/100)*(n-1), result = v[floor(r)] + frac(r)*(v[floor(r)+1] - v[floor(r)]).
double percentile_of_sorted(std::span<const double> sorted, double p);

// Same rule over the present slots of a series. Throws EmptyInputError when
// every slot is missing.
double percentile(const SpeedSeries& series, double p);

// Linearly fill every interior MISSING run shorter than max_gap minutes that
// is bounded by present values on both sides. Longer runs and runs touching
// the series edges stay missing.
SpeedSeries interpolate_gaps(const SpeedSeries& series, int max_gap);

// Centered moving average over the present slots inside an odd window. The
// window shrinks symmetrically near the edges; missing slots stay missing and
// never enter a neighbour's average.
SpeedSeries smooth(const SpeedSeries& series, int window);

// Sub-series covering [t0, t1), truncated to the series span. Throws
// OutOfRangeError when the window and the series are disjoint.
SpeedSeries window(const SpeedSeries& series, Minute t0, Minute t1);

}  // namespace probelag
