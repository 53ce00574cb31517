#pragma once

// Minimal deterministic SVG builder. Coordinates are printed with two
// decimals so equal inputs always produce byte-identical documents.

#include <string>
#include <string_view>
#include <vector>

namespace dlpeval::svg {

std::string num(double v);
std::string escape(std::string_view text);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

class Document {
 public:
  Document(double width, double height);

  void rect(double x, double y, double w, double h, std::string_view fill,
            std::string_view stroke = "none");
  void line(double x1, double y1, double x2, double y2, std::string_view stroke, double width = 1.0,
            std::string_view dash = {});
  void circle(double cx, double cy, double r, std::string_view fill, double opacity = 1.0,
              std::string_view extra_attrs = {});
  void polyline(const std::vector<Point>& pts, std::string_view stroke, double width = 1.5,
                std::string_view dash = {});
  void text(double x, double y, std::string_view content, double size = 12.0,
            std::string_view anchor = "start", std::string_view extra_attrs = {});

  void open_group(std::string_view attrs);
  void close_group();

  std::string finish();

 private:
  std::string out_;
  int depth_ = 0;
};

/// Linear map from a data interval onto a pixel interval.
class Scale {
 public:
  Scale(double d0, double d1, double p0, double p1);
  double operator()(double v) const;
  double domain_min() const { return d0_; }
  double domain_max() const { return d1_; }

 private:
  double d0_, d1_, p0_, p1_;
};

/// Up to `count` round tick values covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int count = 5);
std::string tick_label(double v);

}  // namespace dlpeval::svg
