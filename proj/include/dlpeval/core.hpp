#pragma once

// Event-stream data model for continuous-time dynamic graphs.
//
// A History is an immutable, chronologically ordered multiset of events
// (source, destination, t). Node labels from the input are remapped once, at
// ingestion, to dense ids 0..node_count()-1; everything downstream works on
// dense ids and the original labels are kept only for export.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dlpeval {

using NodeId = std::uint32_t;
using Timestamp = double;

struct Event {
  NodeId source = 0;
  NodeId destination = 0;
  Timestamp t = 0.0;

  friend bool operator==(const Event&, const Event&) = default;
};

enum class Directedness : std::uint8_t { Directed, Undirected };

struct GraphKind {
  Directedness directedness = Directedness::Directed;
  // Sources and destinations are disjoint node universes. Always treated
  // with directed semantics.
  bool bipartite = false;

  bool directed() const { return bipartite || directedness == Directedness::Directed; }

  static GraphKind directed_graph() { return {Directedness::Directed, false}; }
  static GraphKind undirected_graph() { return {Directedness::Undirected, false}; }
  static GraphKind bipartite_graph() { return {Directedness::Directed, true}; }
};

/// A node pair independent of time. Undirected keys satisfy a <= b.
struct EdgeKey {
  NodeId a = 0;
  NodeId b = 0;

  std::uint64_t packed() const { return (std::uint64_t{a} << 32) | b; }
  static EdgeKey unpack(std::uint64_t v) {
    return {static_cast<NodeId>(v >> 32), static_cast<NodeId>(v & 0xffffffffu)};
  }

  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

EdgeKey canonical_edge(NodeId u, NodeId v, GraphKind kind);

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.packed());
  }
};

/// Input rejected at ingestion. line() is 1-based (the header is line 1) or
/// 0 when the error is not tied to a particular line.
class IngestError : public std::runtime_error {
 public:
  IngestError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class History {
 public:
  History() = default;

  /// Builds a history over an already dense id space. Events are stably
  /// sorted by timestamp. Labels default to the decimal ids.
  /// For bipartite kinds, ids [0, source_count) are the source universe and
  /// [source_count, node_count) the destination universe.
  static History from_events(std::vector<Event> events, GraphKind kind, std::size_t node_count,
                             bool allow_self_loops = false, std::size_t source_count = 0,
                             std::vector<std::string> labels = {});

  std::span<const Event> events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  const Event& operator[](std::size_t i) const { return events_[i]; }

  GraphKind kind() const { return kind_; }
  std::size_t node_count() const { return labels_ ? labels_->size() : 0; }
  bool allow_self_loops() const { return allow_self_loops_; }

  /// Number of source-role ids; meaningful for bipartite graphs only.
  std::size_t source_count() const { return source_count_; }
  bool is_source_universe(NodeId u) const { return u < source_count_; }

  const std::string& label(NodeId u) const { return (*labels_)[u]; }
  std::span<const std::string> labels() const {
    return labels_ ? std::span<const std::string>(*labels_) : std::span<const std::string>();
  }

  EdgeKey edge_of(const Event& e) const { return canonical_edge(e.source, e.destination, kind_); }

  Timestamp min_time() const;
  Timestamp max_time() const;

  /// Index of the first event with t >= bound.
  std::size_t lower_index(Timestamp bound) const;

  /// Events with t' < t. Shares the node id space and labels.
  History slice_until(Timestamp t) const;
  /// Events with t' >= t.
  History slice_from(Timestamp t) const;

 private:
  History subrange(std::size_t first, std::size_t last) const;

  std::vector<Event> events_;
  GraphKind kind_{};
  bool allow_self_loops_ = false;
  std::size_t source_count_ = 0;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

enum class CsvSchema : std::uint8_t { Minimal, Jodie };

struct IngestOptions {
  CsvSchema schema = CsvSchema::Minimal;
  GraphKind kind{};
  bool allow_self_loops = false;
};

/// Reads a header line followed by comma-separated rows. Minimal rows are
/// (source, destination, timestamp); JODIE rows are (user_id, item_id,
/// timestamp, state_label, ...) with columns past the third ignored.
/// Dense ids are assigned in order of first appearance after the stable
/// chronological sort, so exporting and re-ingesting is the identity.
History ingest_csv(std::istream& in, const IngestOptions& options);
History ingest_csv_file(const std::string& path, const IngestOptions& options);

/// Minimal-schema export using original labels and round-trip-exact
/// timestamps.
void write_minimal_csv(const History& h, std::ostream& out);
/// `id,label` map.
void write_label_map(const History& h, std::ostream& out);

/// Per-node and per-edge event ordinals (H^u and H^(u,v)).
class EventIndex {
 public:
  explicit EventIndex(const History& h);

  /// Ordinals of events where u is source or destination, ascending.
  std::span<const std::size_t> node_events(NodeId u) const;
  /// Ordinals of events on the canonical edge key, ascending.
  std::span<const std::size_t> edge_events(EdgeKey key) const;
  std::size_t edge_count() const { return edge_events_.size(); }

 private:
  std::vector<std::size_t> node_offsets_;
  std::vector<std::size_t> node_ordinals_;
  std::unordered_map<EdgeKey, std::vector<std::size_t>, EdgeKeyHash> edge_events_;
};

/// Formats a double with 17 significant digits (exact round trip).
std::string format_exact(double v);
/// Parses a finite double from the whole of `text`; false on any garbage.
bool parse_double(std::string_view text, double& out);

}  // namespace dlpeval
