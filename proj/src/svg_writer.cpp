#include "svg_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dlpeval::svg {

std::string num(double v) {
  if (std::abs(v) < 0.005) v = 0.0;  // no "-0.00"
  char buf[48];
  int n = std::snprintf(buf, sizeof buf, "%.2f", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default:
        // Control characters are not allowed in XML 1.0 text.
        if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n') {
          out.push_back('?');
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

Document::Document(double width, double height) {
  out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
          num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
          "\" font-family=\"Helvetica, Arial, sans-serif\">\n";
  rect(0, 0, width, height, "#ffffff");
}

void Document::rect(double x, double y, double w, double h, std::string_view fill,
                    std::string_view stroke) {
  out_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" +
          num(h) + "\" fill=\"" + escape(fill) + "\" stroke=\"" + escape(stroke) + "\"/>\n";
}

void Document::line(double x1, double y1, double x2, double y2, std::string_view stroke,
                    double width, std::string_view dash) {
  out_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
          num(y2) + "\" stroke=\"" + escape(stroke) + "\" stroke-width=\"" + num(width) + "\"";
  if (!dash.empty()) out_ += " stroke-dasharray=\"" + escape(dash) + "\"";
  out_ += "/>\n";
}

void Document::circle(double cx, double cy, double r, std::string_view fill, double opacity,
                      std::string_view extra_attrs) {
  out_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\" fill=\"" +
          escape(fill) + "\"";
  if (opacity < 1.0) out_ += " fill-opacity=\"" + num(opacity) + "\"";
  if (!extra_attrs.empty()) {
    out_.push_back(' ');
    out_ += extra_attrs;
  }
  out_ += "/>\n";
}

void Document::polyline(const std::vector<Point>& pts, std::string_view stroke, double width,
                        std::string_view dash) {
  out_ += "<polyline fill=\"none\" stroke=\"" + escape(stroke) + "\" stroke-width=\"" + num(width) + "\"";
  if (!dash.empty()) out_ += " stroke-dasharray=\"" + escape(dash) + "\"";
  out_ += " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out_.push_back(' ');
    out_ += num(pts[i].x) + "," + num(pts[i].y);
  }
  out_ += "\"/>\n";
}

void Document::text(double x, double y, std::string_view content, double size,
                    std::string_view anchor, std::string_view extra_attrs) {
  out_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + num(size) +
          "\" text-anchor=\"" + escape(anchor) + "\"";
  if (!extra_attrs.empty()) {
    out_.push_back(' ');
    out_ += extra_attrs;
  }
  out_ += ">" + escape(content) + "</text>\n";
}

void Document::open_group(std::string_view attrs) {
  out_ += "<g";
  if (!attrs.empty()) {
    out_.push_back(' ');
    out_ += attrs;
  }
  out_ += ">\n";
  ++depth_;
}

void Document::close_group() {
  if (depth_ == 0) throw std::logic_error("close_group without open_group");
  out_ += "</g>\n";
  --depth_;
}

std::string Document::finish() {
  while (depth_ > 0) close_group();
  out_ += "</svg>\n";
  return std::move(out_);
}

Scale::Scale(double d0, double d1, double p0, double p1) : d0_(d0), d1_(d1), p0_(p0), p1_(p1) {
  if (!(d1_ > d0_)) {
    // Degenerate domain: widen symmetrically so a single value sits mid-axis.
    const double pad = d0_ == 0.0 ? 1.0 : std::abs(d0_) * 0.05;
    d0_ -= pad;
    d1_ += pad;
  }
}

double Scale::operator()(double v) const { return p0_ + (v - d0_) / (d1_ - d0_) * (p1_ - p0_); }

std::vector<double> nice_ticks(double lo, double hi, int count) {
  if (!(hi > lo)) return {lo};
  const double raw = (hi - lo) / std::max(1, count);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (auto k = static_cast<long long>(std::ceil(lo / step - 1e-9));
       static_cast<double>(k) * step <= hi + step * 1e-9; ++k) {
    ticks.push_back(static_cast<double>(k) * step);
  }
  return ticks;
}

std::string tick_label(double v) {
  char buf[48];
  int n = std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace dlpeval::svg
