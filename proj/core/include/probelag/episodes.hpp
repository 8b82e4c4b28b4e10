#pragma once

#include <string>
#include <vector>

#include "probelag/chrono.hpp"
#include "probelag/speed_series.hpp"

namespace probelag {

struct EpisodeParams {
  double ffs_percentile = 80.0;  // free-flow speed percentile
  double mst_fraction = 0.40;    // slowdown threshold as a fraction of FFS
  int max_patch_gap = 5;         // missing runs >= this many minutes discard an episode
  int merge_gap = 30;            // adjacent episodes closer than this merge
  int min_duration = 60;         // episodes shorter than this are dropped
};

enum EpisodeFlags : unsigned {
  kSpStartClipped = 1u << 0,
  kRpEndClipped = 1u << 1,
};

// One slowdown-and-recovery episode on a (segment, day): speeds leave free
// flow at sp_start, bottom out at transition and are back at free flow by
// rp_end. ffs/mst record the thresholds the day was scanned with.
struct Episode {
  std::string segment_id;
  Date date{};
  int utc_offset_min = 0;
  Minute sp_start{};
  Minute transition{};
  Minute rp_end{};
  double ffs = 0.0;
  double mst = 0.0;
  double min_speed = 0.0;
  unsigned flags = 0;

  int duration_min() const {
    return static_cast<int>((rp_end - sp_start).count());
  }
};

std::string format_episode_flags(unsigned flags);
unsigned parse_episode_flags(const std::string& text);

// Scan one day for candidate episodes: mark present slots below MST, take
// each maximal marked run (missing slots terminate a run), place the
// transition at the run's earliest minimum and search outward for the first
// slot back at FFS. Searches that hit the day edge or a neighbouring
// candidate clip there and set the matching flag.
// Throws EmptyInputError when the day has no present slot.
std::vector<Episode> detect_candidates(const SpeedSeries& day,
                                       const EpisodeParams& params);

// Rule-based filtering, in order: discard candidates containing a missing run
// of max_patch_gap or more minutes; patch shorter runs linearly inside the
// window; merge episodes separated by at most merge_gap minutes (transition
// moves to the merged window's minimum; merges cascade); drop episodes
// shorter than min_duration.
std::vector<Episode> apply_filters(std::vector<Episode> candidates,
                                   const SpeedSeries& day,
                                   const EpisodeParams& params);

// detect_candidates followed by apply_filters; chronological, disjoint.
std::vector<Episode> detect_episodes(const SpeedSeries& day,
                                     const EpisodeParams& params);

}  // namespace probelag
