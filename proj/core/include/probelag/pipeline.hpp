#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "probelag/episodes.hpp"
#include "probelag/ingest.hpp"
#include "probelag/latency.hpp"
#include "probelag/stats.hpp"

namespace probelag {

// In-memory orchestration shared by the CLI and the test suites. Everything
// here is pure: same inputs, same outputs.

struct PrepParams {
  int max_patch_gap = 5;
  int smooth_window = 5;
  bool smooth_reference = true;
  bool smooth_probe = true;
};

// Gap-patch then (optionally) smooth one day of data.
SpeedSeries prepare_series(const SpeedSeries& raw, const PrepParams& prep,
                           bool is_reference);

using SeriesKey = std::pair<std::string, Date>;  // (segment_id, date)
using SeriesMap = std::map<SeriesKey, SpeedSeries>;

SeriesMap group_by_day(std::span<const SpeedSeries> series);

// Prepare every reference day and run episode detection; episodes come back
// sorted by (segment, date, sp_start).
struct DetectOutput {
  SeriesMap prepared_reference;
  std::vector<Episode> episodes;
};

DetectOutput detect_all(const SeriesMap& reference, const EpisodeParams& params,
                        const PrepParams& prep);

struct MeasureParams {
  ShiftBounds bounds;
  double min_overlap_frac = 0.8;
};

// A combination that produced no latency row, with a machine-readable reason.
struct SkippedCase {
  std::string segment_id;
  std::string vendor_id;
  Date date{};
  Minute episode_start{};
  Period period = Period::kSre;
  std::string reason;
};

inline constexpr const char* kReasonMissingProbeDay = "MISSING_PROBE_DAY";
inline constexpr const char* kReasonMissingRefDay = "MISSING_REF_DAY";
inline constexpr const char* kReasonWindowTooShort = "WINDOW_TOO_SHORT";
inline constexpr const char* kReasonInsufficientOverlap = "INSUFFICIENT_OVERLAP";
inline constexpr const char* kReasonRefWindowDisjoint = "REF_WINDOW_DISJOINT";

struct MeasureOutput {
  std::vector<LatencyResult> results;  // sorted; see measure_all
  std::vector<SkippedCase> skipped;
};

// One row per (episode, vendor, period in SRE/SP/RP) where measurable.
// Results sort by (segment, vendor, date, episode_start, period) so rows of
// one episode stay together in file order.
MeasureOutput measure_all(
    std::span<const Episode> episodes, const SeriesMap& prepared_reference,
    const std::map<std::string, SeriesMap>& prepared_probes,
    const MeasureParams& params);

// Aggregated report mirroring the summary tables and distribution plots.
struct ReportTables {
  std::vector<AggregateCell> table3;  // state x vendor x period
  std::vector<ShareCell> table4;      // per state plus pooled "Total" rows
  struct PairTest {
    std::string vendor_a;
    std::string vendor_b;
    TestResult test;
  };
  std::vector<PairTest> table5;                 // SRE rows pooled per vendor
  std::vector<std::string> table5_skipped;      // degenerate pairs, "A|B"
  struct DistRow {
    std::string vendor;
    Period period = Period::kSre;
    DistributionSummary dist;
  };
  std::vector<DistRow> distributions;
  std::vector<AmPmCell> am_pm;
  std::optional<CorrelationResult> length_corr;
  std::string length_corr_note;  // set when length_corr is absent
};

ReportTables build_report(std::span<const LatencyResult> results,
                          const std::map<std::string, Segment>& segments,
                          ShiftBounds bounds);

// Restore episode_start/utc_offset_min on rows parsed from the latency file
// by walking each (segment, vendor, date) group in file order against that
// day's episodes in chronological order (a period value that does not
// advance the SRE->SP->RP sequence starts the next episode).
std::vector<LatencyResult> attach_episode_starts(
    std::vector<LatencyResult> rows, std::span<const Episode> episodes);

}  // namespace probelag
