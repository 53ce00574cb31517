#include "dlpeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>

namespace dlpeval {

namespace {

void require_strategy(const ScoredEventLog& log, NegativeStrategy s) {
  for (const auto& r : log.records) {
    if (r.role.strategy == s) return;
  }
  throw std::invalid_argument("strategy " + std::string(to_string(s)) + " is not present in the log");
}

void require_finite(std::span<const double> xs) {
  for (double x : xs) {
    if (std::isnan(x)) throw std::invalid_argument("NaN score");
  }
}

}  // namespace

ConfusionMatrix confusion_at_threshold(const ScoredEventLog& log, NegativeStrategy strategy,
                                       double threshold) {
  require_strategy(log, strategy);
  std::vector<std::uint64_t> covered;
  for (const auto& r : log.records) {
    if (r.role.strategy == strategy) covered.push_back(r.event_ordinal);
  }
  std::sort(covered.begin(), covered.end());
  ConfusionMatrix m;
  for (const auto& r : log.records) {
    const bool predicted = r.score >= threshold;
    if (r.role.is_positive()) {
      if (!std::binary_search(covered.begin(), covered.end(), r.event_ordinal)) continue;
      ++(predicted ? m.tp : m.fn);
    } else if (r.role.strategy == strategy) {
      ++(predicted ? m.fp : m.tn);
    }
  }
  return m;
}

double batch_auc(std::span<const double> positive_scores, std::span<const double> negative_scores) {
  if (positive_scores.empty() || negative_scores.empty()) {
    throw UndefinedMetric("AUC needs at least one positive and one negative score");
  }
  require_finite(positive_scores);
  require_finite(negative_scores);
  std::vector<double> neg(negative_scores.begin(), negative_scores.end());
  std::sort(neg.begin(), neg.end());
  // Twice the Mann-Whitney U statistic, kept integral so the ratio is exact
  // up to the final division.
  std::uint64_t twice_u = 0;
  for (double p : positive_scores) {
    auto lo = std::lower_bound(neg.begin(), neg.end(), p);
    auto hi = std::upper_bound(lo, neg.end(), p);
    twice_u += 2 * static_cast<std::uint64_t>(lo - neg.begin()) + static_cast<std::uint64_t>(hi - lo);
  }
  return static_cast<double>(twice_u) /
         (2.0 * static_cast<double>(positive_scores.size()) * static_cast<double>(neg.size()));
}

std::string_view to_string(Period p) {
  switch (p) {
    case Period::Train: return "train";
    case Period::Test: return "test";
    case Period::All: return "all";
  }
  return "?";
}

std::optional<Period> parse_period(std::string_view s) {
  for (Period p : {Period::Train, Period::Test, Period::All}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

BatchAUCReport mean_auc_over_batches(const ScoredEventLog& log, NegativeStrategy strategy,
                                     Period period, Timestamp t_split) {
  require_strategy(log, strategy);
  struct Bucket {
    std::vector<double> pos;
    std::vector<double> neg;
    Timestamp t_start = 0.0;
    Timestamp t_end = 0.0;
    bool touched = false;
  };
  std::map<std::uint64_t, Bucket> buckets;
  for (const auto& r : log.records) {
    const bool in_test = r.t >= t_split;
    if ((period == Period::Test && !in_test) || (period == Period::Train && in_test)) continue;
    const bool is_pos = r.role.is_positive();
    if (!is_pos && r.role.strategy != strategy) continue;
    Bucket& b = buckets[r.batch];
    if (!b.touched) {
      b.t_start = b.t_end = r.t;
      b.touched = true;
    }
    b.t_start = std::min(b.t_start, r.t);
    b.t_end = std::max(b.t_end, r.t);
    (is_pos ? b.pos : b.neg).push_back(r.score);
  }

  BatchAUCReport report;
  report.strategy = strategy;
  report.period = period;
  double sum = 0.0;
  for (auto& [batch, b] : buckets) {
    if (b.pos.empty() || b.neg.empty()) {
      ++report.excluded_batches;
      continue;
    }
    double auc = batch_auc(b.pos, b.neg);
    report.batches.push_back({batch, b.t_start, b.t_end, auc});
    sum += auc;
  }
  if (report.batches.empty()) {
    throw UndefinedMetric("no " + std::string(to_string(period)) + " batch has both positives and " +
                          std::string(to_string(strategy)) + " negatives");
  }
  report.mean_auc = sum / static_cast<double>(report.batches.size());
  return report;
}

SeedSummary summarize_over_seeds(std::span<const double> per_seed_means) {
  if (per_seed_means.empty()) throw UndefinedMetric("no seeds to summarize");
  SeedSummary s;
  s.seeds = per_seed_means.size();
  s.mean = std::accumulate(per_seed_means.begin(), per_seed_means.end(), 0.0) /
           static_cast<double>(s.seeds);
  if (s.seeds > 1) {
    double ss = 0.0;
    for (double x : per_seed_means) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(s.seeds - 1));
  }
  return s;
}

std::vector<double> rank_within_group(std::span<const double> scores) {
  require_finite(scores);
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  std::vector<double> ranks(scores.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    // Positions i..j (0-based) hold ranks i+1..j+1.
    const double shared = static_cast<double>(i + j + 2) / 2.0;
    for (std::size_t p = i; p <= j; ++p) ranks[order[p]] = shared;
    i = j + 1;
  }
  return ranks;
}

MARSeries mar_time_series(const ScoredEventLog& log, std::size_t bins) {
  if (bins < 1) throw std::invalid_argument("need at least one bin");
  if (log.empty()) throw std::invalid_argument("empty score log");

  MARSeries series;
  series.roles.push_back(Role::positive());
  for (NegativeStrategy s : log.strategies()) series.roles.push_back(Role::negative(s));
  auto role_index = [&](const Role& r) {
    return static_cast<std::size_t>(
        std::find(series.roles.begin(), series.roles.end(), r) - series.roles.begin());
  };

  Timestamp t0 = log.records.front().t;
  Timestamp t1 = t0;
  for (const auto& r : log.records) {
    t0 = std::min(t0, r.t);
    t1 = std::max(t1, r.t);
  }
  const double width = (t1 - t0) / static_cast<double>(bins);
  series.edges.resize(bins + 1);
  for (std::size_t b = 0; b < bins; ++b) series.edges[b] = t0 + width * static_cast<double>(b);
  series.edges[bins] = t1;
  auto bin_of = [&](Timestamp t) -> std::size_t {
    if (width <= 0.0) return 0;
    auto b = static_cast<std::size_t>(std::floor((t - t0) / width));
    return std::min(b, bins - 1);
  };

  std::vector<std::vector<double>> sums(series.roles.size(), std::vector<double>(bins, 0.0));
  series.counts.assign(series.roles.size(), std::vector<std::size_t>(bins, 0));

  // Group records by event ordinal without assuming file order.
  std::vector<std::size_t> order(log.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return log.records[a].event_ordinal < log.records[b].event_ordinal;
  });
  std::vector<double> group_scores;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    const auto ordinal = log.records[order[i]].event_ordinal;
    while (j < order.size() && log.records[order[j]].event_ordinal == ordinal) ++j;
    group_scores.clear();
    for (std::size_t p = i; p < j; ++p) group_scores.push_back(log.records[order[p]].score);
    std::vector<double> ranks = rank_within_group(group_scores);
    for (std::size_t p = i; p < j; ++p) {
      const auto& r = log.records[order[p]];
      const std::size_t role = role_index(r.role);
      const std::size_t b = bin_of(r.t);
      sums[role][b] += ranks[p - i];
      ++series.counts[role][b];
    }
    i = j;
  }

  series.mar.assign(series.roles.size(), std::vector<std::optional<double>>(bins));
  for (std::size_t r = 0; r < series.roles.size(); ++r) {
    for (std::size_t b = 0; b < bins; ++b) {
      if (series.counts[r][b] > 0) {
        series.mar[r][b] = sums[r][b] / static_cast<double>(series.counts[r][b]);
      }
    }
  }
  return series;
}

void write_auc_csv(const std::vector<BatchAUCReport>& reports, std::ostream& out) {
  out << "strategy,batch,t_start,t_end,auc\n";
  for (const auto& rep : reports) {
    for (const auto& b : rep.batches) {
      out << to_string(rep.strategy) << ',' << b.batch << ',' << format_exact(b.t_start) << ','
          << format_exact(b.t_end) << ',' << format_exact(b.auc) << '\n';
    }
  }
}

void write_mar_csv(const MARSeries& series, std::ostream& out) {
  out << "bin,t_start,t_end,role,mar,count\n";
  for (std::size_t b = 0; b < series.bins(); ++b) {
    for (std::size_t r = 0; r < series.roles.size(); ++r) {
      out << b << ',' << format_exact(series.edges[b]) << ',' << format_exact(series.edges[b + 1])
          << ',' << series.roles[r].name() << ','
          << (series.mar[r][b] ? format_exact(*series.mar[r][b]) : std::string()) << ','
          << series.counts[r][b] << '\n';
    }
  }
}

}  // namespace dlpeval
