#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rydberg {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
};

/// Self-contained static SVG 1.1 line plot: axes with ticks, optional
/// vertical/horizontal marker lines (dashed, labelled), legend.
struct PlotSpec {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  std::vector<PlotSeries> series;
  std::vector<std::pair<double, std::string>> vlines;
  std::vector<std::pair<double, std::string>> hlines;
  int width = 880;
  int height = 560;
};

void write_svg(const PlotSpec& spec, std::ostream& os);

}  // namespace rydberg
