#pragma once

// Vector-graphic (SVG) rendering of Birth-Death diagrams, surprise sweep
// curves and MAR-over-time plots, plus the raw data behind them.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dlpeval/metrics.hpp"
#include "dlpeval/partition.hpp"

namespace dlpeval {

struct CategoryColors {
  std::array<std::string, 3> by_category{"#007ba6", "#ff9933", "#008000"};

  const std::string& operator[](TemporalCategory c) const {
    return by_category[static_cast<std::size_t>(c)];
  }
};

struct BDPoint {
  Timestamp death = 0.0;  // x
  Timestamp birth = 0.0;  // y
  TemporalCategory category = TemporalCategory::Historical;
  std::size_t key_index = 0;  // row in the source LifetimeTable
};

struct BDPanelSpec {
  std::string title;
  KeyKind kind = KeyKind::Node;
  std::vector<BDPoint> points;
  std::array<std::size_t, 3> category_counts{};
};

/// Everything a Birth-Death rendering needs, independent of the output
/// format. One panel per key kind (two for role-faceted bipartite graphs).
struct BDDiagramSpec {
  Timestamp t_split = 0.0;
  std::vector<BDPanelSpec> panels;
};

struct BDOptions {
  std::string title;
  CategoryColors colors{};
  /// Per-panel cap on drawn points. Larger panels are thinned by a seeded
  /// reservoir sample stratified by category; the CSV keeps every key.
  std::size_t max_points = 100000;
  std::uint64_t seed = 0;
  double point_radius = 2.0;
  double point_opacity = 0.6;
};

/// Renders a key as text for the data CSV; defaults to the dense id.
using NodeLabeler = std::function<std::string(NodeId)>;

struct LabeledTable {
  std::string title;
  const LifetimeTable* table = nullptr;
};

BDDiagramSpec make_bd_spec(const std::vector<LabeledTable>& panels, Timestamp t_split);

struct RenderedDiagram {
  std::string svg;
  /// `key,birth,death,category`; one row per key over all panels.
  std::string csv;
  std::size_t drawn_points = 0;
};

/// Throws std::invalid_argument if any panel is empty.
RenderedDiagram bd_diagram(const std::vector<LabeledTable>& panels, Timestamp t_split,
                           const BDOptions& options = {}, const NodeLabeler& labeler = {});

struct SurpriseSeries {
  std::string name;
  std::vector<SweepPoint> points;
  /// Ratio highlighted with a '*' marker when present in `points`.
  double marked_ratio = 0.15;
};

struct CurveOptions {
  std::string title = "Surprise index vs. test ratio";
  std::vector<std::string> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};
};

/// Node surprise (x) against edge surprise (y), one path per series.
/// Throws std::invalid_argument when a series has fewer than two defined
/// points.
std::string surprise_curve(const std::vector<SurpriseSeries>& series, const CurveOptions& options = {});

struct MarPlotOptions {
  std::string title = "Mean average rank over time";
  double marker_radius = 3.0;
};

/// One line per role with gaps at empty bins and a guide at t_split. Throws
/// std::invalid_argument when every bin is empty.
std::string mar_plot(const MARSeries& series, Timestamp t_split, const MarPlotOptions& options = {});

}  // namespace dlpeval
