#include "epibench/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace epibench {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 24.0;
constexpr double kTop = 44.0;
constexpr double kBottom = 52.0;
constexpr int kTicks = 5;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_line_chart(const std::string& title,
                              const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<Series>& series) {
  if (series.empty())
    throw std::invalid_argument("render_line_chart: no series");

  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const Series& s : series) {
    if (s.x.size() != s.y.size())
      throw std::invalid_argument("render_line_chart: series '" + s.label +
                                  "' has mismatched x/y lengths");
    if (s.x.size() < 2)
      throw std::invalid_argument("render_line_chart: series '" + s.label +
                                  "' needs at least 2 points");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
        throw std::invalid_argument("render_line_chart: series '" + s.label +
                                    "' contains a non-finite value");
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (xmax == xmin) { xmin -= 0.5; xmax += 0.5; }
  if (ymax == ymin) { ymin -= 0.5; ymax += 0.5; }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  const auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"720\" "
         "height=\"480\" viewBox=\"0 0 720 480\">\n";
  svg += "<rect width=\"720\" height=\"480\" fill=\"#ffffff\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" + xml_escape(title) +
         "</text>\n";

  // Axes.
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(kTop + plot_h) +
         "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
         num(kLeft + plot_w) + "\" y2=\"" + num(kTop + plot_h) +
         "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  // Ticks and grid lines.
  for (int i = 0; i < kTicks; ++i) {
    const double fx = xmin + (xmax - xmin) * i / (kTicks - 1);
    const double fy = ymin + (ymax - ymin) * i / (kTicks - 1);
    const double gx = px(fx);
    const double gy = py(fy);
    svg += "<line x1=\"" + num(gx) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" +
           num(gx) + "\" y2=\"" + num(kTop + plot_h + 5) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(gx) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           num(fx) + "</text>\n";
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(gy) + "\" x2=\"" +
           num(kLeft) + "\" y2=\"" + num(gy) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(gy + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           num(fy) + "</text>\n";
  }

  // Axis labels.
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 14) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         xml_escape(x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 16 " + num(kTop + plot_h / 2) + ")\">" +
         xml_escape(y_label) + "</text>\n";

  // Curves.
  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    std::string pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!pts.empty()) pts += ' ';
      pts += num(px(s.x[i])) + "," + num(py(s.y[i]));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(kPalette[k % kPaletteSize]) +
           "\" stroke-width=\"1.5\"";
    if (s.dashed) svg += " stroke-dasharray=\"6 4\"";
    svg += " points=\"" + pts + "\"/>\n";
  }

  // Legend, top-right inside the plot area.
  const double lx = kLeft + plot_w - 170.0;
  double ly = kTop + 10.0;
  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" +
           num(lx + 24) + "\" y2=\"" + num(ly) + "\" stroke=\"" +
           std::string(kPalette[k % kPaletteSize]) + "\" stroke-width=\"1.5\"";
    if (s.dashed) svg += " stroke-dasharray=\"6 4\"";
    svg += "/>\n";
    svg += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + xml_escape(s.label) +
           "</text>\n";
    ly += 18.0;
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace epibench
