#include "dlpeval/partition.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <unordered_map>

namespace dlpeval {

std::string_view to_string(TemporalCategory c) {
  switch (c) {
    case TemporalCategory::Historical: return "historical";
    case TemporalCategory::Overlap: return "overlap";
    case TemporalCategory::Inductive: return "inductive";
  }
  return "?";
}

TemporalCategory categorize(const Lifetime& l, Timestamp t_split) {
  if (l.death < t_split) return TemporalCategory::Historical;
  if (l.birth >= t_split) return TemporalCategory::Inductive;
  return TemporalCategory::Overlap;
}

std::string_view to_string(KeyKind k) {
  switch (k) {
    case KeyKind::Node: return "node";
    case KeyKind::Edge: return "edge";
    case KeyKind::SourceNode: return "source_node";
    case KeyKind::DestinationNode: return "destination_node";
  }
  return "?";
}

std::optional<KeyKind> parse_key_kind(std::string_view s) {
  for (KeyKind k : {KeyKind::Node, KeyKind::Edge, KeyKind::SourceNode, KeyKind::DestinationNode}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

LifetimeTable node_lifetimes(const History& h, KeyKind kind) {
  constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
  std::vector<Lifetime> spans(h.node_count(), Lifetime{kUnset, kUnset});
  const bool use_source = kind != KeyKind::DestinationNode;
  const bool use_destination = kind != KeyKind::SourceNode;
  auto touch = [&](NodeId u, Timestamp t) {
    Lifetime& l = spans[u];
    // Events are chronological: the first touch is the birth.
    if (std::isnan(l.birth)) l.birth = t;
    l.death = t;
  };
  for (const Event& e : h.events()) {
    if (use_source) touch(e.source, e.t);
    if (use_destination) touch(e.destination, e.t);
  }
  LifetimeTable table;
  table.kind = kind;
  for (std::size_t u = 0; u < spans.size(); ++u) {
    if (std::isnan(spans[u].birth)) continue;
    table.nodes.push_back(static_cast<NodeId>(u));
    table.spans.push_back(spans[u]);
  }
  return table;
}

LifetimeTable edge_lifetimes(const History& h) {
  LifetimeTable table;
  table.kind = KeyKind::Edge;
  std::unordered_map<std::uint64_t, std::uint32_t> slot;
  slot.reserve(h.size() / 2 + 16);
  for (const Event& e : h.events()) {
    EdgeKey key = h.edge_of(e);
    auto [it, inserted] = slot.try_emplace(key.packed(), static_cast<std::uint32_t>(table.spans.size()));
    if (inserted) {
      table.edges.push_back(key);
      table.spans.push_back({e.t, e.t});
    } else {
      table.spans[it->second].death = e.t;
    }
  }
  return table;
}

}  // namespace

LifetimeTable lifetimes(const History& h, KeyKind kind) {
  if (h.empty()) throw std::invalid_argument("lifetimes of an empty history");
  if ((kind == KeyKind::SourceNode || kind == KeyKind::DestinationNode) && !h.kind().directed()) {
    throw std::invalid_argument("role-split lifetimes require a directed or bipartite graph");
  }
  return kind == KeyKind::Edge ? edge_lifetimes(h) : node_lifetimes(h, kind);
}

Timestamp compute_cutoff(const History& h, double test_ratio) {
  if (!(test_ratio > 0.0 && test_ratio < 1.0)) {
    throw std::invalid_argument("test ratio must lie in (0, 1)");
  }
  if (h.empty()) throw std::invalid_argument("cannot split an empty history");
  const std::size_t n = h.size();
  // The small slack absorbs representation error in (1 - ratio) so that, for
  // example, 0.7 * 90 lands on 63 and not 62.
  double train_events = std::floor((1.0 - test_ratio) * static_cast<double>(n) + 1e-9);
  std::size_t index = std::min(static_cast<std::size_t>(train_events), n - 1);
  Timestamp t_split = h[index].t;
  if (t_split <= h.min_time()) {
    throw DegenerateSplit("degenerate split: the cutoff " + format_exact(t_split) +
                          " leaves no training events");
  }
  return t_split;
}

TrainTestSplit split(const History& h, Timestamp t_split) {
  return {h.slice_until(t_split), h.slice_from(t_split)};
}

std::optional<double> CategoryCounts::surprise() const {
  std::size_t active = inductive + overlap;
  if (active == 0) return std::nullopt;
  return static_cast<double>(inductive) / static_cast<double>(active);
}

CategoryCounts count_categories(const LifetimeTable& table, Timestamp t_split) {
  CategoryCounts c;
  c.kind = table.kind;
  c.total = table.size();
  for (const Lifetime& l : table.spans) {
    switch (categorize(l, t_split)) {
      case TemporalCategory::Historical: ++c.historical; break;
      case TemporalCategory::Overlap: ++c.overlap; break;
      case TemporalCategory::Inductive: ++c.inductive; break;
    }
  }
  return c;
}

const CategoryCounts* PartitionReport::find(KeyKind kind) const {
  for (const auto& r : rows) {
    if (r.kind == kind) return &r;
  }
  return nullptr;
}

PartitionReport partition_report(const History& h, Timestamp t_split,
                                 const std::vector<KeyKind>& kinds) {
  PartitionReport report;
  report.t_split = t_split;
  for (KeyKind k : kinds) report.rows.push_back(count_categories(lifetimes(h, k), t_split));
  return report;
}

std::vector<SweepPoint> surprise_sweep(const History& h, const std::vector<double>& ratios) {
  for (double r : ratios) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("sweep ratio must lie in (0, 1)");
  }
  LifetimeTable nodes = lifetimes(h, KeyKind::Node);
  LifetimeTable edges = lifetimes(h, KeyKind::Edge);
  std::vector<SweepPoint> out;
  out.reserve(ratios.size());
  for (double r : ratios) {
    Timestamp t = compute_cutoff(h, r);
    out.push_back({r, t, count_categories(nodes, t).surprise(), count_categories(edges, t).surprise()});
  }
  return out;
}

namespace {

std::string optional_field(const std::optional<double>& v) {
  return v ? format_exact(*v) : std::string();
}

}  // namespace

void write_partition_csv(const PartitionReport& report, std::ostream& out) {
  out << "kind,total,historical,overlap,inductive,surprise\n";
  for (const auto& r : report.rows) {
    out << to_string(r.kind) << ',' << r.total << ',' << r.historical << ',' << r.overlap << ','
        << r.inductive << ',' << optional_field(r.surprise()) << '\n';
  }
}

void write_sweep_csv(const std::vector<SweepPoint>& sweep, std::ostream& out) {
  out << "ratio,node_surprise,edge_surprise\n";
  for (const auto& p : sweep) {
    out << format_exact(p.ratio) << ',' << optional_field(p.node_surprise) << ','
        << optional_field(p.edge_surprise) << '\n';
  }
}

}  // namespace dlpeval
