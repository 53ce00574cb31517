#pragma once

// Time-based train/test splitting, birth/death lifetimes and the
// Historical / Overlap / Inductive partition of nodes and edges.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlpeval/core.hpp"

namespace dlpeval {

/// Earliest and latest event time of a key over the full history.
struct Lifetime {
  Timestamp birth = 0.0;
  Timestamp death = 0.0;

  friend bool operator==(const Lifetime&, const Lifetime&) = default;
};

enum class TemporalCategory : std::uint8_t { Historical, Overlap, Inductive };

std::string_view to_string(TemporalCategory c);

/// Historical: death < t_split. Inductive: birth >= t_split. Overlap otherwise.
TemporalCategory categorize(const Lifetime& l, Timestamp t_split);

enum class KeyKind : std::uint8_t { Node, Edge, SourceNode, DestinationNode };

std::string_view to_string(KeyKind k);
std::optional<KeyKind> parse_key_kind(std::string_view s);

/// Lifetimes of every key of one kind that has at least one event.
/// Node kinds fill `nodes`, the edge kind fills `edges`; `spans` is parallel
/// to whichever is filled. Nodes are in ascending id order, edges in order of
/// first appearance.
struct LifetimeTable {
  KeyKind kind = KeyKind::Node;
  std::vector<NodeId> nodes;
  std::vector<EdgeKey> edges;
  std::vector<Lifetime> spans;

  std::size_t size() const { return spans.size(); }
  bool is_edge_table() const { return kind == KeyKind::Edge; }
};

/// Throws std::invalid_argument for role-split kinds on undirected graphs and
/// for an empty history.
LifetimeTable lifetimes(const History& h, KeyKind kind);

/// t_split is the timestamp of the (floor((1 - test_ratio) * N) + 1)-th
/// event. Events with t >= t_split form the test set, so ties at the cutoff
/// all land in test.
/// Throws std::invalid_argument for ratios outside (0,1) or an empty history,
/// and DegenerateSplit when the cutoff leaves the train set empty (for
/// instance when all events share one timestamp).
Timestamp compute_cutoff(const History& h, double test_ratio);

class DegenerateSplit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrainTestSplit {
  History train;
  History test;
};

TrainTestSplit split(const History& h, Timestamp t_split);

struct CategoryCounts {
  KeyKind kind = KeyKind::Node;
  std::size_t total = 0;
  std::size_t historical = 0;
  std::size_t overlap = 0;
  std::size_t inductive = 0;

  /// inductive / (inductive + overlap); nullopt when nothing is active in test.
  std::optional<double> surprise() const;
};

CategoryCounts count_categories(const LifetimeTable& table, Timestamp t_split);

struct PartitionReport {
  Timestamp t_split = 0.0;
  std::vector<CategoryCounts> rows;

  const CategoryCounts* find(KeyKind kind) const;
};

PartitionReport partition_report(const History& h, Timestamp t_split,
                                 const std::vector<KeyKind>& kinds);

struct SweepPoint {
  double ratio = 0.0;
  Timestamp t_split = 0.0;
  std::optional<double> node_surprise;
  std::optional<double> edge_surprise;
};

/// One point per ratio, in the given order. Lifetimes are computed once.
std::vector<SweepPoint> surprise_sweep(const History& h, const std::vector<double>& ratios);

/// `kind,total,historical,overlap,inductive,surprise`; undefined surprise is
/// written as an empty field.
void write_partition_csv(const PartitionReport& report, std::ostream& out);
/// `ratio,node_surprise,edge_surprise`
void write_sweep_csv(const std::vector<SweepPoint>& sweep, std::ostream& out);

}  // namespace dlpeval
