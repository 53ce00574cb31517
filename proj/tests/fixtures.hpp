#pragma once

// Fixed synthetic inputs for the diagram golden files.

#include <vector>

#include "dlpeval/diagrams.hpp"
#include "dlpeval/metrics.hpp"
#include "dlpeval/partition.hpp"

namespace dlpeval::testing_support {

// Four nodes active on both sides of t=5 and a newcomer that only meets A.
inline History newcomer_history() {
  std::vector<Event> ev;
  for (NodeId u = 0; u < 4; ++u) {
    for (NodeId v = u + 1; v < 4; ++v) {
      ev.push_back({u, v, 1.0 + u});
      ev.push_back({u, v, 8.0 + v});
    }
  }
  ev.push_back({0, 1, 2.5});
  ev.push_back({4, 0, 10.0});
  return History::from_events(ev, GraphKind::directed_graph(), 5, false, 0, {"A", "B", "C", "D", "E"});
}

inline constexpr Timestamp kNewcomerSplit = 5.0;

inline std::vector<SweepPoint> fixed_sweep() {
  return {{0.1, 90, 0.05, 0.30}, {0.15, 85, 0.08, 0.35}, {0.2, 80, 0.11, 0.42},
          {0.3, 70, 0.15, 0.40}, {0.4, 60, 0.22, 0.47}, {0.5, 50, 0.30, 0.55}};
}

// Worked-example ranks in the first of three bins, a gap in the middle and a
// single event in the last.
inline ScoredEventLog fixed_mar_log() {
  const int ranks[5][3] = {{1, 2, 3}, {3, 1, 2}, {2, 3, 1}, {1, 2, 3}, {1, 3, 2}};
  const double times[5] = {0.0, 0.5, 1.0, 1.5, 9.0};
  ScoredEventLog log;
  for (std::uint64_t i = 0; i < 5; ++i) {
    const double t = times[i];
    log.records.push_back({i, i / 2, Role::positive(), 0, 1, t, 4.0 - ranks[i][0]});
    log.records.push_back({i, i / 2, Role::negative(NegativeStrategy::HE), 2, 3, t, 4.0 - ranks[i][1]});
    log.records.push_back({i, i / 2, Role::negative(NegativeStrategy::OD), 0, 4, t, 4.0 - ranks[i][2]});
  }
  return log;
}

inline RenderedDiagram fixed_bd_diagram() {
  History h = newcomer_history();
  LifetimeTable nodes = lifetimes(h, KeyKind::Node);
  LifetimeTable edges = lifetimes(h, KeyKind::Edge);
  BDOptions opts;
  opts.title = "newcomer";
  return bd_diagram({{"Nodes", &nodes}, {"Edges", &edges}}, kNewcomerSplit, opts,
                    [&h](NodeId u) { return h.label(u); });
}

inline std::string fixed_surprise_curve() {
  return surprise_curve({{"synthetic", fixed_sweep(), 0.15}});
}

inline std::string fixed_mar_plot() { return mar_plot(mar_time_series(fixed_mar_log(), 3), 1.2); }

}  // namespace dlpeval::testing_support
