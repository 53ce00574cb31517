#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dlpeval/core.hpp"
#include "dlpeval/rng.hpp"

namespace dlpeval::testing_support {

using Triple = std::tuple<NodeId, NodeId, double>;

inline History make_history(std::initializer_list<Triple> rows, GraphKind kind = GraphKind::directed_graph(),
                            std::size_t node_count = 0) {
  std::vector<Event> events;
  std::size_t n = node_count;
  for (const auto& [u, v, t] : rows) {
    events.push_back({u, v, t});
    n = std::max<std::size_t>(n, std::max(u, v) + 1);
  }
  return History::from_events(std::move(events), kind, n);
}

inline History parse_minimal(const std::string& text, GraphKind kind = GraphKind::directed_graph()) {
  std::istringstream in(text);
  IngestOptions opts;
  opts.kind = kind;
  return ingest_csv(in, opts);
}

// Random directed stream: `nodes` ids, integer timestamps drawn in [0, span).
inline History random_history(std::uint64_t seed, std::size_t events, std::size_t nodes, std::uint64_t span,
                              GraphKind kind = GraphKind::directed_graph()) {
  SplitMix64 rng(seed);
  std::vector<Event> out;
  out.reserve(events);
  while (out.size() < events) {
    auto u = static_cast<NodeId>(rng.below(nodes));
    auto v = static_cast<NodeId>(rng.below(nodes));
    if (u == v) continue;
    out.push_back({u, v, static_cast<double>(rng.below(span))});
  }
  return History::from_events(std::move(out), kind, nodes);
}

// Sliding node window: early ids retire and late ids only appear near the
// end, so every temporal category is populated at most cutoffs.
inline History churn_history(std::uint64_t seed, std::size_t events, std::size_t width, std::size_t drift,
                             GraphKind kind = GraphKind::directed_graph()) {
  SplitMix64 rng(seed);
  std::vector<Event> out;
  out.reserve(events);
  while (out.size() < events) {
    const std::size_t lo = out.size() * drift / events;
    auto u = static_cast<NodeId>(lo + rng.below(width));
    auto v = static_cast<NodeId>(lo + rng.below(width));
    if (u == v) continue;
    out.push_back({u, v, static_cast<double>(out.size())});
  }
  return History::from_events(std::move(out), kind, width + drift);
}

// Bipartite stream: sources [0, s), destinations [s, s + d).
inline History random_bipartite(std::uint64_t seed, std::size_t events, std::size_t s, std::size_t d,
                                std::uint64_t span) {
  SplitMix64 rng(seed);
  std::vector<Event> out;
  for (std::size_t i = 0; i < events; ++i) {
    out.push_back({static_cast<NodeId>(rng.below(s)), static_cast<NodeId>(s + rng.below(d)),
                   static_cast<double>(rng.below(span))});
  }
  return History::from_events(std::move(out), GraphKind::bipartite_graph(), s + d, false, s);
}

}  // namespace dlpeval::testing_support
