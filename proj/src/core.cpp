#include "dlpeval/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

namespace dlpeval {

EdgeKey canonical_edge(NodeId u, NodeId v, GraphKind kind) {
  if (kind.directed()) return {u, v};
  return {std::min(u, v), std::max(u, v)};
}

std::string format_exact(double v) {
  char buf[32];
  int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

bool parse_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

// ---------------------------------------------------------------------------
// History

History History::from_events(std::vector<Event> events, GraphKind kind, std::size_t node_count,
                             bool allow_self_loops, std::size_t source_count,
                             std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count) {
    throw std::invalid_argument("label count does not match node count");
  }
  if (kind.bipartite && source_count > node_count) {
    throw std::invalid_argument("source universe larger than node count");
  }
  for (const Event& e : events) {
    if (e.source >= node_count || e.destination >= node_count) {
      throw std::out_of_range("event references a node id outside the id space");
    }
    if (!std::isfinite(e.t) || e.t < 0.0) {
      throw std::invalid_argument("event timestamp must be finite and non-negative");
    }
    if (kind.bipartite) {
      if (e.source >= source_count || e.destination < source_count) {
        throw std::invalid_argument("bipartite event crosses role universes");
      }
    } else if (!allow_self_loops && e.source == e.destination) {
      throw std::invalid_argument("self-loop event while self-loops are disabled");
    }
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& x, const Event& y) { return x.t < y.t; });
  if (labels.empty()) {
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
  }
  History h;
  h.events_ = std::move(events);
  h.kind_ = kind;
  h.allow_self_loops_ = allow_self_loops;
  h.source_count_ = kind.bipartite ? source_count : 0;
  h.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  return h;
}

Timestamp History::min_time() const {
  if (events_.empty()) throw std::logic_error("min_time of an empty history");
  return events_.front().t;
}

Timestamp History::max_time() const {
  if (events_.empty()) throw std::logic_error("max_time of an empty history");
  return events_.back().t;
}

std::size_t History::lower_index(Timestamp bound) const {
  auto it = std::lower_bound(events_.begin(), events_.end(), bound,
                             [](const Event& e, Timestamp b) { return e.t < b; });
  return static_cast<std::size_t>(it - events_.begin());
}

History History::subrange(std::size_t first, std::size_t last) const {
  History h;
  h.events_.assign(events_.begin() + static_cast<std::ptrdiff_t>(first),
                   events_.begin() + static_cast<std::ptrdiff_t>(last));
  h.kind_ = kind_;
  h.allow_self_loops_ = allow_self_loops_;
  h.source_count_ = source_count_;
  h.labels_ = labels_;
  return h;
}

History History::slice_until(Timestamp t) const { return subrange(0, lower_index(t)); }

History History::slice_from(Timestamp t) const { return subrange(lower_index(t), events_.size()); }

// ---------------------------------------------------------------------------
// CSV ingestion

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits one CSV record. Supports double-quoted fields with "" escapes; does
// not support quoted newlines. Returns false on an unterminated quote.
bool split_fields(std::string_view line, std::vector<std::string>& fields) {
  fields.clear();
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"' && trim(cur).empty()) {
      cur.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? cur : std::string(trim(cur)));
      cur.clear();
      was_quoted = false;
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) return false;
  fields.push_back(was_quoted ? cur : std::string(trim(cur)));
  return true;
}

struct RawRow {
  std::string source;
  std::string destination;
  Timestamp t;
  std::size_t line;
};

class LabelTable {
 public:
  NodeId intern(const std::string& label) {
    auto [it, inserted] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }
  std::vector<std::string>& labels() { return labels_; }
  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::string> labels_;
};

}  // namespace

History ingest_csv(std::istream& in, const IngestOptions& options) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      have_header = true;
      break;
    }
  }
  if (!have_header) throw IngestError("empty stream: no header line", 0);

  std::vector<RawRow> rows;
  std::vector<std::string> fields;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (!split_fields(line, fields)) throw IngestError("unterminated quoted field", line_no);
    if (fields.size() < 3) {
      throw IngestError("expected at least 3 columns, found " + std::to_string(fields.size()), line_no);
    }
    if (options.schema == CsvSchema::Minimal && fields.size() != 3) {
      throw IngestError("minimal schema expects exactly 3 columns, found " +
                            std::to_string(fields.size()), line_no);
    }
    if (fields[0].empty() || fields[1].empty()) throw IngestError("empty node label", line_no);
    double t = 0.0;
    if (!parse_double(fields[2], t)) {
      throw IngestError("timestamp '" + fields[2] + "' is not a finite number", line_no);
    }
    if (t < 0.0) throw IngestError("negative timestamp " + fields[2], line_no);
    if (!options.kind.bipartite && !options.allow_self_loops && fields[0] == fields[1]) {
      throw IngestError("self-loop on node '" + fields[0] + "'", line_no);
    }
    rows.push_back({std::move(fields[0]), std::move(fields[1]), t, line_no});
  }
  if (rows.empty()) throw IngestError("empty stream: no events after the header", 0);

  std::stable_sort(rows.begin(), rows.end(),
                   [](const RawRow& x, const RawRow& y) { return x.t < y.t; });

  std::vector<Event> events;
  events.reserve(rows.size());
  std::vector<std::string> labels;
  std::size_t source_count = 0;
  if (options.kind.bipartite) {
    LabelTable sources;
    LabelTable destinations;
    for (const RawRow& r : rows) {
      events.push_back({sources.intern(r.source), destinations.intern(r.destination), r.t});
    }
    source_count = sources.size();
    for (Event& e : events) e.destination += static_cast<NodeId>(source_count);
    labels = std::move(sources.labels());
    auto& dst = destinations.labels();
    labels.insert(labels.end(), std::make_move_iterator(dst.begin()),
                  std::make_move_iterator(dst.end()));
  } else {
    LabelTable nodes;
    for (const RawRow& r : rows) {
      NodeId u = nodes.intern(r.source);
      NodeId v = nodes.intern(r.destination);
      events.push_back({u, v, r.t});
    }
    labels = std::move(nodes.labels());
  }
  if (labels.size() > std::size_t{0xffffffffu}) throw IngestError("too many distinct nodes", 0);
  std::size_t n = labels.size();
  return History::from_events(std::move(events), options.kind, n, options.allow_self_loops,
                              source_count, std::move(labels));
}

History ingest_csv_file(const std::string& path, const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open '" + path + "'", 0);
  return ingest_csv(in, options);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos && trim(s).size() == s.size()) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

void write_minimal_csv(const History& h, std::ostream& out) {
  out << "source,destination,timestamp\n";
  for (const Event& e : h.events()) {
    out << csv_field(h.label(e.source)) << ',' << csv_field(h.label(e.destination)) << ','
        << format_exact(e.t) << '\n';
  }
}

void write_label_map(const History& h, std::ostream& out) {
  out << "id,label\n";
  for (std::size_t i = 0; i < h.node_count(); ++i) {
    out << i << ',' << csv_field(h.label(static_cast<NodeId>(i))) << '\n';
  }
}

// ---------------------------------------------------------------------------
// EventIndex

EventIndex::EventIndex(const History& h) : node_offsets_(h.node_count() + 1, 0) {
  auto evs = h.events();
  for (const Event& e : evs) {
    ++node_offsets_[e.source + 1];
    if (e.destination != e.source) ++node_offsets_[e.destination + 1];
  }
  for (std::size_t i = 1; i < node_offsets_.size(); ++i) node_offsets_[i] += node_offsets_[i - 1];
  node_ordinals_.resize(node_offsets_.back());
  std::vector<std::size_t> cursor(node_offsets_.begin(), node_offsets_.end() - 1);
  for (std::size_t i = 0; i < evs.size(); ++i) {
    const Event& e = evs[i];
    node_ordinals_[cursor[e.source]++] = i;
    if (e.destination != e.source) node_ordinals_[cursor[e.destination]++] = i;
    edge_events_[h.edge_of(e)].push_back(i);
  }
}

std::span<const std::size_t> EventIndex::node_events(NodeId u) const {
  if (std::size_t{u} + 1 >= node_offsets_.size()) return {};
  return std::span<const std::size_t>(node_ordinals_).subspan(
      node_offsets_[u], node_offsets_[u + 1] - node_offsets_[u]);
}

std::span<const std::size_t> EventIndex::edge_events(EdgeKey key) const {
  auto it = edge_events_.find(key);
  if (it == edge_events_.end()) return {};
  return it->second;
}

}  // namespace dlpeval
