#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlpeval/core.hpp"
#include "dlpeval/sampling.hpp"

namespace dlpeval {

/// Either the positive event or one negative-sampling strategy.
struct Role {
  std::optional<NegativeStrategy> strategy;

  static Role positive() { return {}; }
  static Role negative(NegativeStrategy s) { return {s}; }

  bool is_positive() const { return !strategy.has_value(); }
  std::string_view name() const { return strategy ? to_string(*strategy) : "positive"; }

  friend bool operator==(const Role&, const Role&) = default;
};

std::optional<Role> parse_role(std::string_view s);

/// One scored event: a positive or one of its negatives.
struct ScoreRecord {
  std::uint64_t event_ordinal = 0;
  std::uint64_t batch = 0;
  Role role;
  NodeId source = 0;
  NodeId destination = 0;
  Timestamp t = 0.0;
  double score = 0.0;

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

/// Records in emission order: for each event, the positive followed by its
/// negatives grouped by strategy.
struct ScoredEventLog {
  std::vector<ScoreRecord> records;

  bool empty() const { return records.empty(); }
  std::size_t size() const { return records.size(); }
  /// Strategies present, in first-appearance order.
  std::vector<NegativeStrategy> strategies() const;

  friend bool operator==(const ScoredEventLog&, const ScoredEventLog&) = default;
};

}  // namespace dlpeval
