#pragma once

// Memory-based heuristic scorers and the batched score-then-ingest harness.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "dlpeval/core.hpp"
#include "dlpeval/sampling.hpp"
#include "dlpeval/score_log.hpp"

namespace dlpeval {

/// Nodes and edges observed so far. Only grows.
class ScorerMemory {
 public:
  ScorerMemory(std::size_t node_count, GraphKind kind) : seen_nodes_(node_count, false), kind_(kind) {}

  void ingest(const Event& e);

  bool seen_node(NodeId u) const { return u < seen_nodes_.size() && seen_nodes_[u]; }
  bool seen_edge(NodeId u, NodeId v) const {
    return seen_edges_.contains(canonical_edge(u, v, kind_).packed());
  }
  GraphKind kind() const { return kind_; }

 private:
  std::vector<bool> seen_nodes_;
  std::unordered_set<std::uint64_t> seen_edges_;
  GraphKind kind_;
};

/// 1 iff both endpoints were observed.
double pa_score(const Event& e, const ScorerMemory& m);
/// 1 iff the (canonical) edge was observed.
double edgebank_score(const Event& e, const ScorerMemory& m);

enum class ScorerKind : std::uint8_t { PreferentialAttachment, EdgeBank, External };

std::string_view to_string(ScorerKind k);
std::optional<ScorerKind> parse_scorer(std::string_view s);

enum class EmptyCandidatePolicy : std::uint8_t { Skip, Abort };

struct StreamingEvalConfig {
  Timestamp t_split = 0.0;
  ScorerKind scorer = ScorerKind::EdgeBank;
  std::vector<NegativeStrategy> strategies;
  std::size_t k_per_strategy = 1;
  std::size_t batch_size = 200;
  std::uint64_t seed = 0;
  EmptyCandidatePolicy policy = EmptyCandidatePolicy::Skip;
  SamplerOptions sampler{};
};

struct StreamingEvalResult {
  ScoredEventLog log;
  /// (event ordinal, strategy) pairs skipped under the Skip policy.
  std::vector<std::pair<std::uint64_t, NegativeStrategy>> skipped;
};

/// Optional sink for per-batch progress and skip warnings.
using ProgressSink = std::function<void(const std::string&)>;

/// Walks the whole history in chronological batches. Each batch is first
/// scored, positives and negatives alike, against the memory as it stood
/// before the batch, and only then are the batch's positives ingested.
/// Under the Abort policy EmptyCandidateSet propagates; under Skip the
/// strategy's negatives for that event are omitted and the pair recorded.
StreamingEvalResult run_streaming_eval(const History& h, const StreamingEvalConfig& config,
                                       const ProgressSink& progress = {});

}  // namespace dlpeval
