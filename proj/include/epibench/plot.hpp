#pragma once

#include <string>
#include <vector>

namespace epibench {

/// One curve on a line chart. x and y must have equal length >= 2 and hold
/// only finite values. Dashed rendering marks reference overlays.
struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

/// Renders a static SVG 1.1 line chart on a fixed 720x480 canvas with axis
/// ticks and a legend. Output is deterministic: same inputs, identical bytes.
/// Throws std::invalid_argument on empty input or malformed series.
std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series);

}  // namespace epibench
