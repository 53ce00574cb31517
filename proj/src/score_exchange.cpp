#include "dlpeval/score_exchange.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>

namespace dlpeval {

namespace {

constexpr std::string_view kColumns = "event_ordinal,batch,role,source,destination,timestamp,score";

std::string join_strategies(const std::vector<NegativeStrategy>& ss) {
  std::string out;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (i) out.push_back(',');
    out += to_string(ss[i]);
  }
  return out;
}

std::size_t header_lines(const ScoreLogMeta& meta) {
  return 6 + (meta.t_split ? 1 : 0) + meta.extra.size();
}

void validate_impl(const ScoredEventLog& log, const ScoreLogMeta& meta,
                   const std::function<std::size_t(std::size_t)>& line_of) {
  const auto& recs = log.records;
  std::uint64_t max_ordinal = 0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    if (r.role.strategy &&
        std::find(meta.strategies.begin(), meta.strategies.end(), *r.role.strategy) ==
            meta.strategies.end()) {
      throw ScoreLogError("strategy " + std::string(r.role.name()) + " is not declared in the header",
                          line_of(i));
    }
    if (!std::isfinite(r.score)) throw ScoreLogError("score is not a finite number", line_of(i));
    if (!std::isfinite(r.t)) throw ScoreLogError("timestamp is not a finite number", line_of(i));
    max_ordinal = std::max(max_ordinal, r.event_ordinal);
  }
  if (recs.empty()) return;
  if (max_ordinal >= recs.size()) {
    throw ScoreLogError("event ordinals are not contiguous from 0 (max ordinal " +
                            std::to_string(max_ordinal) + " with " + std::to_string(recs.size()) +
                            " records)", 0);
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> positive_at(max_ordinal + 1, kNone);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    if (!recs[i].role.is_positive()) continue;
    std::size_t& slot = positive_at[recs[i].event_ordinal];
    if (slot != kNone) {
      throw ScoreLogError("duplicate positive for event " + std::to_string(recs[i].event_ordinal),
                          line_of(i));
    }
    slot = i;
  }
  for (std::size_t o = 0; o < positive_at.size(); ++o) {
    if (positive_at[o] == kNone) {
      throw ScoreLogError("event ordinals are not contiguous from 0: no positive for event " +
                              std::to_string(o), 0);
    }
  }
  for (std::size_t o = 1; o < positive_at.size(); ++o) {
    const auto& prev = recs[positive_at[o - 1]];
    const auto& cur = recs[positive_at[o]];
    if (cur.t < prev.t) {
      throw ScoreLogError("timestamp disorder: event " + std::to_string(o) + " precedes event " +
                              std::to_string(o - 1) + " in time", line_of(positive_at[o]));
    }
    if (cur.batch < prev.batch) {
      throw ScoreLogError("batch disorder: event " + std::to_string(o) + " has an earlier batch",
                          line_of(positive_at[o]));
    }
  }
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    if (r.role.is_positive()) continue;
    const auto& pos = recs[positive_at[r.event_ordinal]];
    if (r.t != pos.t) {
      throw ScoreLogError("negative timestamp " + format_exact(r.t) +
                              " differs from its positive's timestamp " + format_exact(pos.t),
                          line_of(i));
    }
    if (r.batch != pos.batch) {
      throw ScoreLogError("negative batch differs from its positive's batch", line_of(i));
    }
  }
}

void check_header_value(const std::string& key, const std::string& value) {
  if (key.empty() || key.find_first_of("= \t\r\n") != std::string::npos) {
    throw ScoreLogError("invalid header key '" + key + "'", 0);
  }
  if (value.find_first_of("\r\n") != std::string::npos) {
    throw ScoreLogError("header value for '" + key + "' contains a line break", 0);
  }
}

template <typename Int>
bool parse_uint(std::string_view s, Int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

void split_commas(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  while (true) {
    auto c = line.find(',');
    out.push_back(line.substr(0, c));
    if (c == std::string_view::npos) break;
    line.remove_prefix(c + 1);
  }
}

}  // namespace

void validate_score_log(const ScoredEventLog& log, const ScoreLogMeta& meta) {
  const std::size_t base = header_lines(meta) + 1;
  validate_impl(log, meta, [base](std::size_t i) { return base + i + 1; });
}

void write_score_log(const ScoredEventLog& log, const ScoreLogMeta& meta, std::ostream& out) {
  check_header_value("dataset", meta.dataset);
  check_header_value("scorer", meta.scorer);
  for (const auto& [k, v] : meta.extra) {
    check_header_value(k, v);
    for (std::string_view reserved : {"dataset", "scorer", "t_split", "batch_size", "strategies", "k", "seed"}) {
      if (k == reserved) throw ScoreLogError("extra header key '" + k + "' shadows a standard key", 0);
    }
  }
  validate_score_log(log, meta);

  out << "# dataset=" << meta.dataset << '\n';
  out << "# scorer=" << meta.scorer << '\n';
  if (meta.t_split) out << "# t_split=" << format_exact(*meta.t_split) << '\n';
  out << "# batch_size=" << meta.batch_size << '\n';
  out << "# strategies=" << join_strategies(meta.strategies) << '\n';
  out << "# k=" << meta.k << '\n';
  out << "# seed=" << meta.seed << '\n';
  for (const auto& [k, v] : meta.extra) out << "# " << k << '=' << v << '\n';
  out << kColumns << '\n';
  for (const auto& r : log.records) {
    out << r.event_ordinal << ',' << r.batch << ',' << r.role.name() << ',' << r.source << ','
        << r.destination << ',' << format_exact(r.t) << ',' << format_exact(r.score) << '\n';
  }
  if (!out) throw std::runtime_error("I/O failure while writing score log");
}

LoadedScoreLog read_score_log(std::istream& in) {
  LoadedScoreLog result;
  ScoreLogMeta& meta = result.meta;
  bool have_strategies = false;
  bool have_columns = false;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] != '#') {
      if (line != kColumns) {
        throw ScoreLogError("expected column header '" + std::string(kColumns) + "'", line_no);
      }
      have_columns = true;
      break;
    }
    std::string_view body(line);
    body.remove_prefix(1);
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ScoreLogError("header line without '='", line_no);
    std::string key(body.substr(0, eq));
    std::string value(body.substr(eq + 1));
    if (key == "dataset") {
      meta.dataset = value;
    } else if (key == "scorer") {
      meta.scorer = value;
    } else if (key == "t_split") {
      double t = 0.0;
      if (!parse_double(value, t)) throw ScoreLogError("t_split is not a finite number", line_no);
      meta.t_split = t;
    } else if (key == "batch_size") {
      if (!parse_uint(value, meta.batch_size)) throw ScoreLogError("invalid batch_size", line_no);
    } else if (key == "k") {
      if (!parse_uint(value, meta.k)) throw ScoreLogError("invalid k", line_no);
    } else if (key == "seed") {
      if (!parse_uint(value, meta.seed)) throw ScoreLogError("invalid seed", line_no);
    } else if (key == "strategies") {
      try {
        meta.strategies = value.empty() ? std::vector<NegativeStrategy>{} : parse_strategy_list(value);
      } catch (const std::invalid_argument& e) {
        throw ScoreLogError(e.what(), line_no);
      }
      have_strategies = true;
    } else {
      meta.extra.emplace_back(std::move(key), std::move(value));
    }
  }
  if (!have_columns) throw ScoreLogError("missing column header", line_no);
  if (!have_strategies) throw ScoreLogError("header does not declare 'strategies'", 0);

  std::vector<std::size_t> lines;
  std::vector<std::string_view> f;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    split_commas(line, f);
    if (f.size() != 7) {
      throw ScoreLogError("expected 7 fields, found " + std::to_string(f.size()), line_no);
    }
    ScoreRecord r;
    if (!parse_uint(f[0], r.event_ordinal)) throw ScoreLogError("invalid event_ordinal", line_no);
    if (!parse_uint(f[1], r.batch)) throw ScoreLogError("invalid batch", line_no);
    auto role = parse_role(f[2]);
    if (!role) throw ScoreLogError("unknown role '" + std::string(f[2]) + "'", line_no);
    r.role = *role;
    if (!parse_uint(f[3], r.source)) throw ScoreLogError("invalid source id", line_no);
    if (!parse_uint(f[4], r.destination)) throw ScoreLogError("invalid destination id", line_no);
    if (!parse_double(f[5], r.t)) throw ScoreLogError("timestamp is not a finite number", line_no);
    if (!parse_double(f[6], r.score)) {
      throw ScoreLogError("score '" + std::string(f[6]) + "' is not a finite number", line_no);
    }
    result.log.records.push_back(r);
    lines.push_back(line_no);
  }
  validate_impl(result.log, meta, [&lines](std::size_t i) { return lines[i]; });
  return result;
}

LoadedScoreLog read_score_log_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScoreLogError("cannot open '" + path + "'", 0);
  return read_score_log(in);
}

}  // namespace dlpeval
