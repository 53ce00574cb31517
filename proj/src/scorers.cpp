#include "dlpeval/scorers.hpp"

#include <algorithm>
#include <iterator>

namespace dlpeval {

std::optional<Role> parse_role(std::string_view s) {
  if (s == "positive") return Role::positive();
  if (auto strategy = parse_strategy(s)) return Role::negative(*strategy);
  return std::nullopt;
}

std::vector<NegativeStrategy> ScoredEventLog::strategies() const {
  std::vector<NegativeStrategy> out;
  for (const auto& r : records) {
    if (r.role.strategy && std::find(out.begin(), out.end(), *r.role.strategy) == out.end()) {
      out.push_back(*r.role.strategy);
    }
  }
  return out;
}

void ScorerMemory::ingest(const Event& e) {
  if (std::max(e.source, e.destination) >= seen_nodes_.size()) {
    seen_nodes_.resize(std::size_t{std::max(e.source, e.destination)} + 1, false);
  }
  seen_nodes_[e.source] = true;
  seen_nodes_[e.destination] = true;
  seen_edges_.insert(canonical_edge(e.source, e.destination, kind_).packed());
}

double pa_score(const Event& e, const ScorerMemory& m) {
  return m.seen_node(e.source) && m.seen_node(e.destination) ? 1.0 : 0.0;
}

double edgebank_score(const Event& e, const ScorerMemory& m) {
  return m.seen_edge(e.source, e.destination) ? 1.0 : 0.0;
}

std::string_view to_string(ScorerKind k) {
  switch (k) {
    case ScorerKind::PreferentialAttachment: return "pa";
    case ScorerKind::EdgeBank: return "edgebank";
    case ScorerKind::External: return "external";
  }
  return "?";
}

std::optional<ScorerKind> parse_scorer(std::string_view s) {
  if (s == "pa") return ScorerKind::PreferentialAttachment;
  if (s == "edgebank") return ScorerKind::EdgeBank;
  if (s == "external") return ScorerKind::External;
  return std::nullopt;
}

StreamingEvalResult run_streaming_eval(const History& h, const StreamingEvalConfig& config,
                                       const ProgressSink& progress) {
  if (config.scorer == ScorerKind::External) {
    throw std::invalid_argument("external scores are imported from a score log, not computed");
  }
  if (config.strategies.empty()) throw std::invalid_argument("at least one strategy is required");
  if (config.batch_size == 0) throw std::invalid_argument("batch size must be at least 1");
  if (config.k_per_strategy == 0) throw std::invalid_argument("k must be at least 1");

  const CandidateIndex index(h, config.t_split);
  ScorerMemory memory(h.node_count(), h.kind());
  auto score = [&](const Event& e) {
    return config.scorer == ScorerKind::EdgeBank ? edgebank_score(e, memory) : pa_score(e, memory);
  };

  StreamingEvalResult result;
  bool warned[std::size(kAllStrategies)] = {};
  result.log.records.reserve(h.size() * (1 + config.strategies.size() * config.k_per_strategy));
  auto events = h.events();
  const std::size_t batches = (events.size() + config.batch_size - 1) / config.batch_size;
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t first = b * config.batch_size;
    const std::size_t last = std::min(events.size(), first + config.batch_size);
    for (std::size_t i = first; i < last; ++i) {
      const Event& pos = events[i];
      result.log.records.push_back({i, b, Role::positive(), pos.source, pos.destination, pos.t, score(pos)});
      for (NegativeStrategy s : config.strategies) {
        NegativeBatch neg;
        try {
          neg = sample_negatives(pos, s, config.k_per_strategy, index,
                                 event_stream_seed(config.seed, i, s), config.sampler);
        } catch (const EmptyCandidateSet& err) {
          if (config.policy == EmptyCandidatePolicy::Abort) throw;
          if (progress && !warned[static_cast<std::size_t>(s)]) {
            warned[static_cast<std::size_t>(s)] = true;
            progress("warning: event " + std::to_string(i) + ": " + err.what() +
                     " (skipped; further skips for this strategy are counted silently)");
          }
          result.skipped.emplace_back(i, s);
          continue;
        }
        for (const Event& e : neg.negatives) {
          result.log.records.push_back({i, b, Role::negative(s), e.source, e.destination, e.t, score(e)});
        }
      }
    }
    for (std::size_t i = first; i < last; ++i) memory.ingest(events[i]);
    if (progress && ((b + 1) % 1000 == 0 || b + 1 == batches)) {
      progress("scored batch " + std::to_string(b + 1) + "/" + std::to_string(batches));
    }
  }
  return result;
}

}  // namespace dlpeval
