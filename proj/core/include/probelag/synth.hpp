#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "probelag/chrono.hpp"
#include "probelag/ingest.hpp"
#include "probelag/speed_series.hpp"

namespace probelag {

// One planted trapezoid slowdown: linear descent from baseline to min_speed,
// a flat trough, linear recovery back to baseline. min_speed must stay below
// 40% of the baseline so the slowdown is detectable.
struct SlowdownProfile {
  double baseline_speed = 65.0;
  double min_speed = 20.0;
  Minute sp_begin{};      // first descending minute
  int descent_min = 40;
  int trough_min = 10;
  int recovery_min = 40;

  // Trough start: the earliest minute at min_speed.
  Minute transition() const {
    return sp_begin + std::chrono::minutes(descent_min);
  }
};

// How a vendor feed is derived from the reference: the slowdown side delayed
// by sp_shift, the recovery side by rp_shift (linear blend between when they
// differ), plus seeded Gaussian noise and independent minute drops.
struct ProbeDerivation {
  int sp_shift = 0;
  int rp_shift = 0;
  double noise_sigma = 0.0;
  double drop_prob = 0.0;
  std::uint64_t seed = 0;
};

enum class NoiseKind { kGaussian, kAr1 };

// Full 1440-minute day: baseline plus the profiles' trapezoids plus seeded
// noise. Profiles must not overlap in time (OverlapError).
SpeedSeries generate_reference_day(const std::string& segment_id, Date date,
                                   int utc_offset_min, double baseline_speed,
                                   std::span<const SlowdownProfile> profiles,
                                   std::uint64_t seed, double noise_sigma,
                                   NoiseKind noise = NoiseKind::kGaussian,
                                   double ar1_rho = 0.6);

// Piecewise-delayed copy of `ref`: probe(t) = ref(t - sp_shift) before the
// transition and ref(t - rp_shift) after it, blended linearly across the
// minutes between the two delayed transition instants. Noise and drops are
// applied afterwards; values clamp into (0, 120].
SpeedSeries derive_probe(const SpeedSeries& ref, const ProbeDerivation& d,
                         Minute transition, const std::string& vendor_id);

// Inverse of the ingest conversion: one travel-time sample per present
// minute, with the start time placed so the midpoint lands inside the minute
// and the duration nudged so the reconstructed speed is bit-equal to the slot
// value whenever the division round-trip admits it.
std::vector<TravelTimeSample> reference_travel_times(const SpeedSeries& ref,
                                                     const Segment& segment);

// The same passages as upstream/downstream detection pairs (integer-second
// timestamps, so reconstructed speeds are only approximate).
std::pair<std::vector<Detection>, std::vector<Detection>>
reference_detections(const SpeedSeries& ref, const Segment& segment,
                     const std::string& up_sensor,
                     const std::string& down_sensor);

// --- multi-day corpus with planted ground truth ---

struct VendorSpec {
  std::string vendor_id;
  double sp_shift_mean = 0.0;
  double rp_shift_mean = 0.0;
  double shift_sigma = 0.0;  // per-day integer shifts ~ round(N(mean, sigma))
  double noise_sigma = 0.0;
  double drop_prob = 0.0;
};

struct CorpusShape {
  double baseline_speed = 65.0;
  double min_speed = 20.0;
  int sp_begin_local_min = 8 * 60 + 30;
  int descent_min = 40;
  int trough_min = 10;
  int recovery_min = 40;
};

struct CorpusConfig {
  Segment segment;
  Date start_date{};
  int days = 1;
  CorpusShape shape;
  double ref_noise_sigma = 0.0;
  NoiseKind noise = NoiseKind::kGaussian;
  double ar1_rho = 0.6;
  std::vector<VendorSpec> vendors;
  std::uint64_t seed = 0;
};

struct DayTruth {
  Date date{};
  Minute transition{};  // planted trough start
  std::map<std::string, std::pair<int, int>> shifts;  // vendor -> (sp, rp)
};

struct Corpus {
  Segment segment;
  std::vector<SpeedSeries> reference;                       // one per day
  std::map<std::string, std::vector<SpeedSeries>> probes;   // vendor -> days
  std::vector<DayTruth> truth;
};

Corpus build_corpus(const CorpusConfig& config);

}  // namespace probelag
