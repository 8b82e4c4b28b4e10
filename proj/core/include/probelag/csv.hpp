#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "probelag/episodes.hpp"
#include "probelag/ingest.hpp"
#include "probelag/latency.hpp"
#include "probelag/speed_series.hpp"

namespace probelag {

// Parsers take whole file contents plus a source label for error messages.
// All throw ParseError (with line numbers), DuplicateRowError or
// OutOfRangeError. Writers are the exact inverses; a written file parses back
// to identical records.

// `segment_id,vendor_id,timestamp,speed_mph`; timestamps ISO-8601 with
// offset, minute-aligned. One series per (segment, vendor, local date),
// spanning the first to the last observed minute.
std::vector<SpeedSeries> parse_probe_feed(std::string_view text,
                                          const std::string& source);
std::string write_probe_feed(std::span<const SpeedSeries> series);

// `sensor_id,device_id,timestamp`
std::vector<Detection> parse_detections(std::string_view text,
                                        const std::string& source);
std::string write_detections(std::span<const Detection> detections,
                             int utc_offset_min);

// `segment_id,start_timestamp,duration_s`
std::vector<TravelTimeSample> parse_travel_times(std::string_view text,
                                                 const std::string& source);
std::string write_travel_times(std::span<const TravelTimeSample> samples,
                               int utc_offset_min);

// `segment_id,state,road,length_mi,timezone`
std::map<std::string, Segment> parse_segments(std::string_view text,
                                              const std::string& source);
std::string write_segments(std::span<const Segment> segments);

// `segment_id,date,sp_start,transition,rp_end,ffs,mst,min_speed,flags`
std::vector<Episode> parse_episodes_csv(std::string_view text,
                                        const std::string& source);
std::string write_episodes_csv(std::span<const Episode> episodes);

// `segment_id,vendor_id,date,period,shift_avd,shift_svd,shift_cor,`
// `mean_latency,overlap_count,flags` -- the file does not carry the episode
// start, so parsed rows leave episode_start/utc_offset_min at their defaults;
// joining against the episodes file restores them.
std::vector<LatencyResult> parse_latency_csv(std::string_view text,
                                             const std::string& source);
std::string write_latency_csv(std::span<const LatencyResult> results);

}  // namespace probelag
