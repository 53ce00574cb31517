#include "dlpeval/sampling.hpp"

#include <algorithm>
#include <ostream>

#include "dlpeval/rng.hpp"

namespace dlpeval {

std::string_view to_string(NegativeStrategy s) {
  switch (s) {
    case NegativeStrategy::HS: return "HS";
    case NegativeStrategy::OS: return "OS";
    case NegativeStrategy::IS: return "IS";
    case NegativeStrategy::HD: return "HD";
    case NegativeStrategy::OD: return "OD";
    case NegativeStrategy::ID: return "ID";
    case NegativeStrategy::HE: return "HE";
    case NegativeStrategy::OE: return "OE";
    case NegativeStrategy::IE: return "IE";
    case NegativeStrategy::RND: return "RND";
  }
  return "?";
}

std::optional<NegativeStrategy> parse_strategy(std::string_view s) {
  for (NegativeStrategy x : kAllStrategies) {
    if (to_string(x) == s) return x;
  }
  return std::nullopt;
}

std::vector<NegativeStrategy> parse_strategy_list(std::string_view csv) {
  std::vector<NegativeStrategy> out;
  while (!csv.empty()) {
    auto comma = csv.find(',');
    std::string_view name = csv.substr(0, comma);
    auto s = parse_strategy(name);
    if (!s) throw std::invalid_argument("unknown negative sampling strategy '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), *s) != out.end()) {
      throw std::invalid_argument("strategy '" + std::string(name) + "' listed twice");
    }
    out.push_back(*s);
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty strategy list");
  return out;
}

bool replaces_source(NegativeStrategy s) {
  return s == NegativeStrategy::HS || s == NegativeStrategy::OS || s == NegativeStrategy::IS;
}

bool replaces_destination(NegativeStrategy s) {
  return s == NegativeStrategy::HD || s == NegativeStrategy::OD || s == NegativeStrategy::ID ||
         s == NegativeStrategy::RND;
}

bool replaces_edge(NegativeStrategy s) {
  return s == NegativeStrategy::HE || s == NegativeStrategy::OE || s == NegativeStrategy::IE;
}

std::optional<TemporalCategory> target_category(NegativeStrategy s) {
  switch (s) {
    case NegativeStrategy::HS:
    case NegativeStrategy::HD:
    case NegativeStrategy::HE: return TemporalCategory::Historical;
    case NegativeStrategy::OS:
    case NegativeStrategy::OD:
    case NegativeStrategy::OE: return TemporalCategory::Overlap;
    case NegativeStrategy::IS:
    case NegativeStrategy::ID:
    case NegativeStrategy::IE: return TemporalCategory::Inductive;
    case NegativeStrategy::RND: return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// CandidateIndex

CandidateIndex::CandidateIndex(const History& h, Timestamp t_split)
    : t_split_(t_split),
      kind_(h.kind()),
      allow_self_loops_(h.allow_self_loops()),
      node_category_(h.node_count()) {
  if (h.empty()) return;
  LifetimeTable nodes = lifetimes(h, KeyKind::Node);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    NodeId u = nodes.nodes[i];
    TemporalCategory c = categorize(nodes.spans[i], t_split);
    node_category_[u] = c;
    if (kind_.bipartite) {
      NodeRole role = h.is_source_universe(u) ? NodeRole::Source : NodeRole::Destination;
      role_nodes_[slot(role, c)].push_back(u);
      universe_[static_cast<std::size_t>(role)].push_back(u);
    } else {
      role_nodes_[slot(NodeRole::Source, c)].push_back(u);
      role_nodes_[slot(NodeRole::Destination, c)].push_back(u);
      universe_[0].push_back(u);
      universe_[1].push_back(u);
    }
  }

  LifetimeTable edges = lifetimes(h, KeyKind::Edge);
  edge_category_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    TemporalCategory c = categorize(edges.spans[i], t_split);
    edges_[static_cast<std::size_t>(c)].push_back(edges.edges[i]);
    edge_category_.emplace(edges.edges[i].packed(), c);
  }

  positives_.reserve(h.size());
  for (const Event& e : h.events()) positives_.emplace_back(e.t, h.edge_of(e).packed());
  std::sort(positives_.begin(), positives_.end());
}

std::span<const NodeId> CandidateIndex::nodes(NodeRole role, TemporalCategory c) const {
  return role_nodes_[slot(role, c)];
}

std::span<const NodeId> CandidateIndex::universe(NodeRole role) const {
  return universe_[static_cast<std::size_t>(role)];
}

std::span<const EdgeKey> CandidateIndex::edges(TemporalCategory c) const {
  return edges_[static_cast<std::size_t>(c)];
}

std::optional<TemporalCategory> CandidateIndex::node_category(NodeId u) const {
  if (u >= node_category_.size()) return std::nullopt;
  return node_category_[u];
}

std::optional<TemporalCategory> CandidateIndex::edge_category(EdgeKey key) const {
  auto it = edge_category_.find(key.packed());
  if (it == edge_category_.end()) return std::nullopt;
  return it->second;
}

bool CandidateIndex::is_positive_at(EdgeKey key, Timestamp t) const {
  return std::binary_search(positives_.begin(), positives_.end(), std::make_pair(t, key.packed()));
}

// ---------------------------------------------------------------------------
// Sampling

std::uint64_t event_stream_seed(std::uint64_t seed, std::uint64_t event_ordinal,
                                NegativeStrategy s) {
  return derive_seed(seed, event_ordinal, static_cast<std::uint64_t>(s) + 1);
}

namespace {

// Maps a candidate position to the negative event it would produce.
class Proposal {
 public:
  Proposal(const Event& pos, NegativeStrategy s, const CandidateIndex& idx) : pos_(pos), idx_(idx) {
    if (replaces_edge(s)) {
      mode_ = Mode::Edge;
      edges_ = idx.edges(*target_category(s));
    } else if (s == NegativeStrategy::RND) {
      mode_ = Mode::Destination;
      nodes_ = idx.universe(NodeRole::Destination);
    } else if (replaces_source(s)) {
      mode_ = Mode::Source;
      nodes_ = idx.nodes(NodeRole::Source, *target_category(s));
    } else {
      mode_ = Mode::Destination;
      nodes_ = idx.nodes(NodeRole::Destination, *target_category(s));
    }
  }

  std::size_t size() const { return mode_ == Mode::Edge ? edges_.size() : nodes_.size(); }

  Event at(std::size_t i) const {
    switch (mode_) {
      case Mode::Edge: return {edges_[i].a, edges_[i].b, pos_.t};
      case Mode::Source: return {nodes_[i], pos_.destination, pos_.t};
      case Mode::Destination: return {pos_.source, nodes_[i], pos_.t};
    }
    return pos_;
  }

  bool legal(const Event& e) const {
    if (e.source == e.destination && !idx_.allow_self_loops()) return false;
    EdgeKey key = idx_.canonical(e.source, e.destination);
    if (key == idx_.canonical(pos_.source, pos_.destination)) return false;
    return !idx_.is_positive_at(key, pos_.t);
  }

 private:
  enum class Mode { Edge, Source, Destination };
  const Event& pos_;
  const CandidateIndex& idx_;
  Mode mode_ = Mode::Edge;
  std::span<const EdgeKey> edges_;
  std::span<const NodeId> nodes_;
};

}  // namespace

NegativeBatch sample_negatives(const Event& pos, NegativeStrategy strategy, std::size_t k,
                               const CandidateIndex& idx, std::uint64_t stream_seed,
                               const SamplerOptions& options) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  Proposal proposal(pos, strategy, idx);
  const std::size_t n = proposal.size();
  if (n == 0) {
    throw EmptyCandidateSet("strategy " + std::string(to_string(strategy)) +
                            " has no candidates at this cutoff");
  }
  SplitMix64 rng(stream_seed);
  NegativeBatch batch{pos, strategy, {}};
  batch.negatives.reserve(k);
  std::vector<std::size_t> legal;  // filled lazily by the exact fallback
  bool scanned = false;
  for (std::size_t draw = 0; draw < k; ++draw) {
    bool found = false;
    if (!scanned) {
      for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
        Event e = proposal.at(rng.below(n));
        if (proposal.legal(e)) {
          batch.negatives.push_back(e);
          found = true;
          break;
        }
      }
    }
    if (found) continue;
    if (!scanned) {
      for (std::size_t i = 0; i < n; ++i) {
        if (proposal.legal(proposal.at(i))) legal.push_back(i);
      }
      scanned = true;
    }
    if (legal.empty()) {
      throw EmptyCandidateSet("strategy " + std::string(to_string(strategy)) +
                              " has no legal candidate for the event at t=" + format_exact(pos.t));
    }
    batch.negatives.push_back(proposal.at(legal[rng.below(legal.size())]));
  }
  return batch;
}

void write_negatives_header(std::ostream& out) {
  out << "event_ordinal,strategy,source,destination,timestamp\n";
}

void write_negatives_rows(std::size_t event_ordinal, const NegativeBatch& batch,
                          std::ostream& out) {
  for (const Event& e : batch.negatives) {
    out << event_ordinal << ',' << to_string(batch.strategy) << ',' << e.source << ','
        << e.destination << ',' << format_exact(e.t) << '\n';
  }
}

}  // namespace dlpeval
