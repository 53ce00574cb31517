#pragma once

// Plain-text score log interchange.
//
//   # dataset=uci
//   # scorer=edgebank
//   # t_split=...
//   # batch_size=200
//   # strategies=HE,OE,IE
//   # k=1
//   # seed=0
//   event_ordinal,batch,role,source,destination,timestamp,score
//   0,0,positive,12,40,0,0
//   0,0,HE,3,7,0,1
//
// Only `strategies` is mandatory in the header; unknown keys are preserved.
// Reals are written with 17 significant digits so reading back is exact.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dlpeval/score_log.hpp"

namespace dlpeval {

struct ScoreLogMeta {
  std::string dataset;
  std::string scorer;
  std::optional<Timestamp> t_split;
  std::size_t batch_size = 200;
  std::vector<NegativeStrategy> strategies;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  /// Additional header keys, written after the standard ones in this order.
  std::vector<std::pair<std::string, std::string>> extra;

  friend bool operator==(const ScoreLogMeta&, const ScoreLogMeta&) = default;
};

/// Schema or invariant violation. line() is the 1-based line in the file
/// (or where the record would be written), 0 if not tied to a line.
class ScoreLogError : public std::runtime_error {
 public:
  ScoreLogError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Checks the log against its header: declared strategies only; exactly one
/// positive per event with ordinals contiguous from 0; negatives share their
/// positive's timestamp and batch; timestamps and batches non-decreasing in
/// event order; finite scores.
void validate_score_log(const ScoredEventLog& log, const ScoreLogMeta& meta);

void write_score_log(const ScoredEventLog& log, const ScoreLogMeta& meta, std::ostream& out);

struct LoadedScoreLog {
  ScoredEventLog log;
  ScoreLogMeta meta;
};

LoadedScoreLog read_score_log(std::istream& in);
LoadedScoreLog read_score_log_file(const std::string& path);

}  // namespace dlpeval
