#pragma once

// Negative sampling for evaluation: the nine category-targeted strategies
// (Historical/Overlap/Inductive x source/destination/edge) plus a uniform
// random-destination baseline.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dlpeval/core.hpp"
#include "dlpeval/partition.hpp"

namespace dlpeval {

enum class NegativeStrategy : std::uint8_t { HS, OS, IS, HD, OD, ID, HE, OE, IE, RND };

inline constexpr NegativeStrategy kAllStrategies[] = {
    NegativeStrategy::HS, NegativeStrategy::OS, NegativeStrategy::IS, NegativeStrategy::HD,
    NegativeStrategy::OD, NegativeStrategy::ID, NegativeStrategy::HE, NegativeStrategy::OE,
    NegativeStrategy::IE, NegativeStrategy::RND};

std::string_view to_string(NegativeStrategy s);
std::optional<NegativeStrategy> parse_strategy(std::string_view s);
/// Comma-separated names, e.g. "HE,OE,IE". Throws std::invalid_argument.
std::vector<NegativeStrategy> parse_strategy_list(std::string_view csv);

bool replaces_source(NegativeStrategy s);
bool replaces_destination(NegativeStrategy s);
bool replaces_edge(NegativeStrategy s);
/// Category of the replaced key; nullopt for RND.
std::optional<TemporalCategory> target_category(NegativeStrategy s);

class EmptyCandidateSet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NodeRole : std::uint8_t { Source, Destination };

/// Candidate sets for every strategy at one cutoff, plus the positive edges
/// at each timestamp so samplers can exclude them. Immutable after
/// construction.
class CandidateIndex {
 public:
  CandidateIndex(const History& h, Timestamp t_split);

  Timestamp t_split() const { return t_split_; }
  GraphKind kind() const { return kind_; }
  bool allow_self_loops() const { return allow_self_loops_; }

  /// Nodes of a category that may stand in the given role. For bipartite
  /// graphs the role universes are disjoint; otherwise both roles share the
  /// full node set.
  std::span<const NodeId> nodes(NodeRole role, TemporalCategory c) const;
  /// Every node that may stand in the role, regardless of category.
  std::span<const NodeId> universe(NodeRole role) const;
  std::span<const EdgeKey> edges(TemporalCategory c) const;

  std::optional<TemporalCategory> node_category(NodeId u) const;
  std::optional<TemporalCategory> edge_category(EdgeKey key) const;

  /// True if an event on this canonical edge occurs at exactly time t.
  bool is_positive_at(EdgeKey key, Timestamp t) const;

  EdgeKey canonical(NodeId u, NodeId v) const { return canonical_edge(u, v, kind_); }

 private:
  static std::size_t slot(NodeRole r, TemporalCategory c) {
    return static_cast<std::size_t>(r) * 3 + static_cast<std::size_t>(c);
  }

  Timestamp t_split_ = 0.0;
  GraphKind kind_{};
  bool allow_self_loops_ = false;
  std::vector<std::optional<TemporalCategory>> node_category_;
  std::vector<NodeId> role_nodes_[6];
  std::vector<NodeId> universe_[2];
  std::vector<EdgeKey> edges_[3];
  std::unordered_map<std::uint64_t, TemporalCategory> edge_category_;
  // (t, packed edge) of every event, sorted lexicographically.
  std::vector<std::pair<Timestamp, std::uint64_t>> positives_;
};

struct NegativeBatch {
  Event positive;
  NegativeStrategy strategy = NegativeStrategy::RND;
  std::vector<Event> negatives;
};

struct SamplerOptions {
  /// Rejection attempts per draw before falling back to an exact scan of the
  /// candidate set.
  std::size_t max_attempts = 1000;
};

/// Seed of the RNG stream for one (event, strategy) pair.
std::uint64_t event_stream_seed(std::uint64_t seed, std::uint64_t event_ordinal,
                                NegativeStrategy s);

/// Draws k negatives at pos.t, uniformly with replacement over the
/// strategy's candidates. A candidate is rejected when it reproduces the
/// positive's edge, any edge observed at exactly pos.t, or a forbidden
/// self-loop. Throws EmptyCandidateSet when no legal candidate exists.
NegativeBatch sample_negatives(const Event& pos, NegativeStrategy strategy, std::size_t k,
                               const CandidateIndex& idx, std::uint64_t stream_seed,
                               const SamplerOptions& options = {});

/// `event_ordinal,strategy,source,destination,timestamp`
void write_negatives_header(std::ostream& out);
void write_negatives_rows(std::size_t event_ordinal, const NegativeBatch& batch,
                          std::ostream& out);

}  // namespace dlpeval
