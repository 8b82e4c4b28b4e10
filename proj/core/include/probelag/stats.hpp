#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "probelag/ingest.hpp"
#include "probelag/latency.hpp"

namespace probelag {

struct GroupBy {
  bool state = true;
  bool vendor = true;
  bool period = true;
};

// Mean shift per fitness function over one group; state/vendor are empty and
// period is nullopt for dimensions the grouping collapsed.
struct AggregateCell {
  std::string state;
  std::string vendor;
  std::optional<Period> period;
  double mean_avd = 0.0;
  double mean_svd = 0.0;
  std::optional<double> mean_cor;  // over rows whose COR shift was defined
  double mean_of_means = 0.0;      // mean of mean_latency
  std::size_t n = 0;
  double stddev = 0.0;  // sample std of mean_latency; 0 when n == 1
};

// Throws EmptyInputError on empty input and Error on a segment id missing
// from the metadata (only looked up when grouping by state).
std::vector<AggregateCell> aggregate(
    std::span<const LatencyResult> results,
    const std::map<std::string, Segment>& segments, GroupBy by = {});

// Fraction of episodes whose SP latency strictly exceeds their RP latency.
// Episodes missing either row do not enter the denominator; empty groups
// produce no row. With by_state = false the rows pool all states (state "").
struct ShareCell {
  std::string state;
  std::string vendor;
  std::size_t episodes = 0;
  double share = 0.0;
};

std::vector<ShareCell> sp_gt_rp_share(
    std::span<const LatencyResult> results,
    const std::map<std::string, Segment>& segments, bool by_state = true);

struct TestResult {
  double t_stat = 0.0;
  double df = 0.0;
  double p_value = 1.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
};

// Welch two-sample t-test, two-sided p via the Student-t distribution.
// Throws DegenerateSampleError for samples smaller than 2 or with zero
// variance.
TestResult welch_t_test(std::span<const double> a, std::span<const double> b);

// Quartiles (same percentile rule as the series code) plus a histogram of
// 1-minute bins over [k_min, k_max]; bin i counts values in
// [k_min+i, k_min+i+1) and the last bin additionally catches exactly k_max.
// Values outside the bounds land in the underflow/overflow counters, so the
// counts always total n.
struct DistributionSummary {
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
  std::vector<std::size_t> bins;
  std::size_t underflow = 0;
  std::size_t overflow = 0;
  std::size_t n = 0;
  int k_min = 0;
  int k_max = 0;
};

DistributionSummary distribution_summary(std::span<const double> values,
                                         ShiftBounds bounds);

// Latency distributions split at local noon of the episode start (episodes
// starting at exactly 12:00 count as PM), per (vendor, period).
struct AmPmCell {
  std::string vendor;
  Period period = Period::kSre;
  bool am = true;
  DistributionSummary dist;
};

std::vector<AmPmCell> am_pm_split(std::span<const LatencyResult> results,
                                  ShiftBounds bounds);

// Pearson correlation between segment length and mean latency, with the
// two-sided p of t = r*sqrt((n-2)/(1-r^2)) on n-2 degrees of freedom.
// Throws DegenerateSampleError on zero variance or fewer than 3 usable rows.
struct CorrelationResult {
  double r = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
};

CorrelationResult length_correlation(
    std::span<const LatencyResult> results,
    const std::map<std::string, Segment>& segments);

// Student-t machinery, exposed for verification.
double incomplete_beta_reg(double a, double b, double x);
double student_t_two_sided_p(double t, double df);
double student_t_cdf(double t, double df);

}  // namespace probelag
