#include "dlpeval/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dlpeval/rng.hpp"
#include "svg_writer.hpp"

namespace dlpeval {

namespace {

constexpr double kPanelWidth = 620.0;
constexpr double kPanelHeight = 500.0;
constexpr double kPlotLeft = 80.0;
constexpr double kPlotRight = 430.0;
constexpr double kPlotTop = 60.0;
constexpr double kPlotBottom = 420.0;

constexpr TemporalCategory kCategories[] = {TemporalCategory::Historical, TemporalCategory::Overlap,
                                            TemporalCategory::Inductive};

std::string category_title(TemporalCategory c) {
  switch (c) {
    case TemporalCategory::Historical: return "Historical";
    case TemporalCategory::Overlap: return "Overlap";
    case TemporalCategory::Inductive: return "Inductive";
  }
  return "?";
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

void draw_axes(svg::Document& doc, const svg::Scale& x, const svg::Scale& y, const std::string& x_label,
               const std::string& y_label, double x_offset) {
  doc.rect(x_offset + kPlotLeft, kPlotTop, kPlotRight - kPlotLeft, kPlotBottom - kPlotTop, "none",
           "#333333");
  for (double v : svg::nice_ticks(x.domain_min(), x.domain_max())) {
    const double px = x(v);
    doc.line(px, kPlotBottom, px, kPlotBottom + 5, "#333333");
    doc.text(px, kPlotBottom + 18, svg::tick_label(v), 10, "middle");
  }
  for (double v : svg::nice_ticks(y.domain_min(), y.domain_max())) {
    const double py = y(v);
    doc.line(x_offset + kPlotLeft - 5, py, x_offset + kPlotLeft, py, "#333333");
    doc.text(x_offset + kPlotLeft - 8, py + 3.5, svg::tick_label(v), 10, "end");
  }
  doc.text(x_offset + (kPlotLeft + kPlotRight) / 2, kPlotBottom + 40, x_label, 13, "middle");
  const double cy = (kPlotTop + kPlotBottom) / 2;
  const double cx = x_offset + 22;
  doc.text(cx, cy, y_label, 13, "middle",
           "transform=\"rotate(-90 " + svg::num(cx) + " " + svg::num(cy) + ")\"");
}

// Indices of the points to draw: all of them, or a stratified seeded
// reservoir sample when the panel exceeds the cap.
std::vector<std::size_t> thin_points(const BDPanelSpec& panel, std::size_t cap, std::uint64_t seed,
                                     std::size_t panel_index) {
  const std::size_t n = panel.points.size();
  std::vector<std::size_t> keep;
  if (n <= cap) {
    keep.resize(n);
    for (std::size_t i = 0; i < n; ++i) keep[i] = i;
    return keep;
  }
  // Largest-remainder apportionment of the cap over categories.
  std::array<std::size_t, 3> quota{};
  std::array<double, 3> remainder{};
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < 3; ++c) {
    const double exact = static_cast<double>(cap) * static_cast<double>(panel.category_counts[c]) /
                         static_cast<double>(n);
    quota[c] = static_cast<std::size_t>(exact);
    remainder[c] = exact - static_cast<double>(quota[c]);
    assigned += quota[c];
  }
  while (assigned < cap) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < 3; ++c) {
      if (remainder[c] > remainder[best]) best = c;
    }
    ++quota[best];
    remainder[best] = -1.0;
    ++assigned;
  }

  for (std::size_t c = 0; c < 3; ++c) {
    SplitMix64 rng(derive_seed(seed, panel_index, c));
    std::vector<std::size_t> reservoir;
    reservoir.reserve(quota[c]);
    std::size_t seen = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (panel.points[i].category != kCategories[c]) continue;
      if (reservoir.size() < quota[c]) {
        reservoir.push_back(i);
      } else {
        const std::uint64_t j = rng.below(seen + 1);
        if (j < quota[c]) reservoir[j] = i;
      }
      ++seen;
    }
    keep.insert(keep.end(), reservoir.begin(), reservoir.end());
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace

BDDiagramSpec make_bd_spec(const std::vector<LabeledTable>& panels, Timestamp t_split) {
  BDDiagramSpec spec;
  spec.t_split = t_split;
  for (const auto& p : panels) {
    if (p.table == nullptr || p.table->size() == 0) {
      throw std::invalid_argument("Birth-Death panel '" + p.title + "' has no keys");
    }
    BDPanelSpec panel;
    panel.title = p.title;
    panel.kind = p.table->kind;
    panel.points.reserve(p.table->size());
    for (std::size_t i = 0; i < p.table->size(); ++i) {
      const Lifetime& l = p.table->spans[i];
      TemporalCategory c = categorize(l, t_split);
      panel.points.push_back({l.death, l.birth, c, i});
      ++panel.category_counts[static_cast<std::size_t>(c)];
    }
    spec.panels.push_back(std::move(panel));
  }
  if (spec.panels.empty()) throw std::invalid_argument("Birth-Death diagram needs at least one panel");
  return spec;
}

RenderedDiagram bd_diagram(const std::vector<LabeledTable>& panels, Timestamp t_split,
                           const BDOptions& options, const NodeLabeler& labeler) {
  const BDDiagramSpec spec = make_bd_spec(panels, t_split);
  auto label = [&](NodeId u) { return labeler ? labeler(u) : std::to_string(u); };

  double lo = t_split;
  double hi = t_split;
  for (const auto& panel : spec.panels) {
    for (const auto& pt : panel.points) {
      lo = std::min(lo, pt.birth);
      hi = std::max(hi, pt.death);
    }
  }
  const double pad = (hi - lo) * 0.02;

  RenderedDiagram out;
  std::ostringstream csv;
  csv << "key,birth,death,category\n";

  const double title_band = options.title.empty() ? 0.0 : 30.0;
  svg::Document doc(kPanelWidth * static_cast<double>(spec.panels.size()), kPanelHeight + title_band);
  if (!options.title.empty()) {
    doc.text(kPanelWidth * static_cast<double>(spec.panels.size()) / 2, 22, options.title, 16, "middle",
             "font-weight=\"bold\"");
  }
  for (std::size_t pi = 0; pi < spec.panels.size(); ++pi) {
    const BDPanelSpec& panel = spec.panels[pi];
    const LifetimeTable& table = *panels[pi].table;
    const double x0 = kPanelWidth * static_cast<double>(pi);
    doc.open_group("transform=\"translate(0 " + svg::num(title_band) + ")\"");
    const svg::Scale x(lo - pad, hi + pad, x0 + kPlotLeft, x0 + kPlotRight);
    const svg::Scale y(lo - pad, hi + pad, kPlotBottom, kPlotTop);

    doc.text(x0 + (kPlotLeft + kPlotRight) / 2, kPlotTop - 20, panel.title, 14, "middle");
    draw_axes(doc, x, y, "Death time", "Birth time", x0);
    doc.line(x(lo - pad), y(lo - pad), x(hi + pad), y(hi + pad), "#bbbbbb", 1.0, "2 3");

    const auto keep = thin_points(panel, options.max_points, options.seed, pi);
    for (TemporalCategory c : kCategories) {
      doc.open_group("class=\"" + std::string(to_string(c)) + "\" fill=\"" + options.colors[c] + "\"");
      for (std::size_t idx : keep) {
        const BDPoint& pt = panel.points[idx];
        if (pt.category != c) continue;
        doc.circle(x(pt.death), y(pt.birth), options.point_radius, options.colors[c],
                   options.point_opacity);
      }
      doc.close_group();
    }
    out.drawn_points += keep.size();

    // Split guides: death = t_split (vertical) and birth = t_split (horizontal).
    doc.line(x(t_split), kPlotTop, x(t_split), kPlotBottom, "#d62728", 1.2, "6 4");
    doc.line(x0 + kPlotLeft, y(t_split), x0 + kPlotRight, y(t_split), "#d62728", 1.2, "6 4");
    doc.text(x(t_split) + 4, kPlotTop + 12, "t_split", 10, "start", "fill=\"#d62728\"");

    double ly = kPlotTop + 10;
    for (TemporalCategory c : kCategories) {
      doc.rect(x0 + kPlotRight + 20, ly - 9, 12, 12, options.colors[c]);
      doc.text(x0 + kPlotRight + 38, ly + 1,
               category_title(c) + " (" +
                   std::to_string(panel.category_counts[static_cast<std::size_t>(c)]) + ")",
               12);
      ly += 22;
    }
    if (keep.size() < panel.points.size()) {
      doc.text(x0 + kPlotRight + 20, ly + 6,
               "showing " + std::to_string(keep.size()) + " of " + std::to_string(panel.points.size()),
               10, "start", "fill=\"#555555\"");
    }
    doc.close_group();

    for (const BDPoint& pt : panel.points) {
      std::string key = table.is_edge_table()
                            ? label(table.edges[pt.key_index].a) + "|" + label(table.edges[pt.key_index].b)
                            : label(table.nodes[pt.key_index]);
      csv << quote_csv(key) << ',' << format_exact(pt.birth) << ',' << format_exact(pt.death) << ','
          << to_string(pt.category) << '\n';
    }
  }
  out.svg = doc.finish();
  out.csv = csv.str();
  return out;
}

std::string surprise_curve(const std::vector<SurpriseSeries>& series, const CurveOptions& options) {
  if (series.empty()) throw std::invalid_argument("surprise curve needs at least one series");
  double max_v = 0.1;
  for (const auto& s : series) {
    std::size_t defined = 0;
    for (const auto& p : s.points) {
      if (p.node_surprise && p.edge_surprise) {
        ++defined;
        max_v = std::max({max_v, *p.node_surprise, *p.edge_surprise});
      }
    }
    if (defined < 2) {
      throw std::invalid_argument("series '" + s.name + "' needs at least two defined sweep points");
    }
  }
  const double top = std::min(1.0, max_v * 1.1);
  svg::Document doc(kPanelWidth, kPanelHeight + 30);
  doc.text(kPanelWidth / 2, 22, options.title, 16, "middle", "font-weight=\"bold\"");
  doc.open_group("transform=\"translate(0 30)\"");
  const svg::Scale x(0.0, top, kPlotLeft, kPlotRight);
  const svg::Scale y(0.0, top, kPlotBottom, kPlotTop);
  draw_axes(doc, x, y, "Node surprise index", "Edge surprise index", 0.0);

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const std::string& color = options.palette[si % options.palette.size()];
    std::vector<svg::Point> path;
    for (const auto& p : s.points) {
      if (p.node_surprise && p.edge_surprise) path.push_back({x(*p.node_surprise), y(*p.edge_surprise)});
    }
    doc.open_group("class=\"series\" data-name=\"" + svg::escape(s.name) + "\"");
    doc.polyline(path, color, 1.8);
    for (const auto& p : s.points) {
      if (!(p.node_surprise && p.edge_surprise)) continue;
      const double px = x(*p.node_surprise);
      const double py = y(*p.edge_surprise);
      doc.circle(px, py, 3.0, color, 1.0, "data-ratio=\"" + svg::tick_label(p.ratio) + "\"");
      if (std::abs(p.ratio - s.marked_ratio) < 1e-9) {
        doc.text(px, py + 7, "*", 22, "middle", "fill=\"" + color + "\" class=\"marker\"");
      } else {
        doc.text(px + 6, py - 6, svg::tick_label(p.ratio), 9, "start", "fill=\"#555555\"");
      }
    }
    doc.close_group();
    const double ly = kPlotTop + 10 + 22 * static_cast<double>(si);
    doc.rect(kPlotRight + 20, ly - 9, 12, 12, color);
    doc.text(kPlotRight + 38, ly + 1, s.name, 12);
  }
  return doc.finish();
}

namespace {

std::string role_color(const Role& r) {
  if (r.is_positive()) return "#000000";
  auto c = target_category(*r.strategy);
  if (!c) return "#888888";
  return CategoryColors{}[*c];
}

std::string role_dash(const Role& r) {
  if (r.is_positive() || !r.strategy) return {};
  if (replaces_destination(*r.strategy)) return "6 3";
  if (replaces_source(*r.strategy)) return "2 2";
  return {};
}

}  // namespace

std::string mar_plot(const MARSeries& series, Timestamp t_split, const MarPlotOptions& options) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& row : series.mar) {
    for (const auto& v : row) {
      if (!v) continue;
      lo = std::min(lo, *v);
      hi = std::max(hi, *v);
    }
  }
  if (!std::isfinite(lo)) throw std::invalid_argument("MAR series has no non-empty bin");
  lo = std::min(lo, 1.0);
  const double span = std::max(hi - lo, 1.0);

  svg::Document doc(kPanelWidth, kPanelHeight + 30);
  doc.text(kPanelWidth / 2, 22, options.title, 16, "middle", "font-weight=\"bold\"");
  doc.open_group("transform=\"translate(0 30)\"");
  const svg::Scale x(series.edges.front(), series.edges.back(), kPlotLeft, kPlotRight);
  const svg::Scale y(lo - 0.05 * span, hi + 0.05 * span, kPlotBottom, kPlotTop);
  draw_axes(doc, x, y, "Time", "Mean average rank", 0.0);

  if (t_split >= x.domain_min() && t_split <= x.domain_max()) {
    doc.line(x(t_split), kPlotTop, x(t_split), kPlotBottom, "#d62728", 1.2, "6 4");
    doc.text(x(t_split) + 4, kPlotTop + 12, "t_split", 10, "start", "fill=\"#d62728\"");
  }

  for (std::size_t r = 0; r < series.roles.size(); ++r) {
    const Role& role = series.roles[r];
    const std::string color = role_color(role);
    const std::string dash = role_dash(role);
    doc.open_group("class=\"role\" data-role=\"" + std::string(role.name()) + "\"");
    std::vector<svg::Point> segment;
    auto flush = [&] {
      if (segment.size() >= 2) doc.polyline(segment, color, 1.6, dash);
      segment.clear();
    };
    for (std::size_t b = 0; b < series.bins(); ++b) {
      const auto& v = series.mar[r][b];
      if (!v) {
        flush();
        continue;
      }
      const double center = (series.edges[b] + series.edges[b + 1]) / 2;
      segment.push_back({x(center), y(*v)});
    }
    flush();
    for (std::size_t b = 0; b < series.bins(); ++b) {
      const auto& v = series.mar[r][b];
      if (!v) continue;
      const double center = (series.edges[b] + series.edges[b + 1]) / 2;
      doc.circle(x(center), y(*v), options.marker_radius, color, 1.0,
                 "data-bin=\"" + std::to_string(b) + "\" data-mar=\"" + format_exact(*v) + "\"");
    }
    doc.close_group();
    const double ly = kPlotTop + 10 + 22 * static_cast<double>(r);
    doc.line(kPlotRight + 18, ly - 3, kPlotRight + 36, ly - 3, color, 2.0, dash);
    doc.text(kPlotRight + 42, ly + 1, role.is_positive() ? "Pos" : std::string(role.name()), 12);
  }
  return doc.finish();
}

}  // namespace dlpeval
