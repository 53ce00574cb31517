#pragma once

// Threshold, ROC AUC and rank-over-time metrics over a ScoredEventLog.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dlpeval/score_log.hpp"

namespace dlpeval {

/// A metric whose inputs do not define it (for example AUC with an empty
/// class). Never silently replaced by a default value.
class UndefinedMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

/// Scores >= threshold are predicted positive. Positives are those of events
/// that carry at least one negative of `strategy`. Throws
/// std::invalid_argument when the strategy is absent from the log.
ConfusionMatrix confusion_at_threshold(const ScoredEventLog& log, NegativeStrategy strategy,
                                       double threshold);

/// Mann-Whitney AUC: (#{p > n} + 0.5 #{p == n}) / (|P| |N|).
double batch_auc(std::span<const double> positive_scores, std::span<const double> negative_scores);

enum class Period : std::uint8_t { Train, Test, All };

std::string_view to_string(Period p);
std::optional<Period> parse_period(std::string_view s);

struct BatchAuc {
  std::uint64_t batch = 0;
  Timestamp t_start = 0.0;
  Timestamp t_end = 0.0;
  double auc = 0.0;
};

struct BatchAUCReport {
  NegativeStrategy strategy = NegativeStrategy::RND;
  Period period = Period::Test;
  std::vector<BatchAuc> batches;
  double mean_auc = 0.0;
  /// Batches in the period lacking positives or negatives.
  std::size_t excluded_batches = 0;
};

/// Unweighted mean of per-batch AUCs. A record belongs to the test period
/// when t >= t_split, so a batch straddling the cutoff contributes its
/// respective halves to each period. Throws UndefinedMetric when no batch is
/// usable and std::invalid_argument for an unknown strategy.
BatchAUCReport mean_auc_over_batches(const ScoredEventLog& log, NegativeStrategy strategy,
                                     Period period, Timestamp t_split);

struct SeedSummary {
  double mean = 0.0;
  /// Sample standard deviation (n - 1); 0 for a single seed.
  double stddev = 0.0;
  std::size_t seeds = 0;
};

SeedSummary summarize_over_seeds(std::span<const double> per_seed_means);

/// Fractional ranks, 1 = highest score; tied scores share the mean of the
/// positions they occupy.
std::vector<double> rank_within_group(std::span<const double> scores);

struct MARSeries {
  /// bins + 1 edges spanning [first event, last event].
  std::vector<Timestamp> edges;
  /// Positive first, then strategies in first-appearance order.
  std::vector<Role> roles;
  /// mar[role][bin]; nullopt marks an empty bin.
  std::vector<std::vector<std::optional<double>>> mar;
  std::vector<std::vector<std::size_t>> counts;

  std::size_t bins() const { return edges.empty() ? 0 : edges.size() - 1; }
};

/// Ranks every event's positive against all of its negatives, then averages
/// each role's ranks within equal-width time bins. Bins are closed on the
/// left; the last bin is closed on both ends.
MARSeries mar_time_series(const ScoredEventLog& log, std::size_t bins = 50);

/// `strategy,batch,t_start,t_end,auc`
void write_auc_csv(const std::vector<BatchAUCReport>& reports, std::ostream& out);
/// `bin,t_start,t_end,role,mar,count`; empty bins leave `mar` blank.
void write_mar_csv(const MARSeries& series, std::ostream& out);

}  // namespace dlpeval
