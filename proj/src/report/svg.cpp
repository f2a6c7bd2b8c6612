#include "beliefnet/report/svg.hpp"

#include <algorithm>
#include <cmath>

#include "beliefnet/util/format.hpp"

namespace beliefnet::report {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr std::size_t kPaletteSize = std::size(kPalette);
constexpr const char* kIncrease = "#2166ac";
constexpr const char* kDecrease = "#d6604d";

std::string num(double v) { return format_fixed(v, 2); }

std::string open_svg(double width, double height, const SvgOptions& options) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  if (options.timestamp) {
    out += "<metadata>generated " + xml_escape(*options.timestamp) + "</metadata>\n";
  }
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"#ffffff\"/>\n";
  return out;
}

std::string text(double x, double y, std::string_view content, std::string_view anchor = "start",
                 int size = 12) {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" +
         std::to_string(size) + "\" text-anchor=\"" + std::string(anchor) + "\">" +
         xml_escape(content) + "</text>\n";
}

std::string rect(double x, double y, double w, double h, std::string_view fill) {
  return "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" +
         num(h) + "\" fill=\"" + std::string(fill) + "\"/>\n";
}

std::string line(double x1, double y1, double x2, double y2, std::string_view stroke = "#000000") {
  return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
         num(y2) + "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string xml_escape(std::string_view in) {
  std::string out;
  for (char c : in) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string scenario_svg(const std::vector<ScenarioRow>& rows, std::size_t target,
                         const SvgOptions& options) {
  const std::string name = rows.empty() ? "" : rows.front().posteriors.at(target).target;
  const std::vector<std::string> levels =
      rows.empty() ? std::vector<std::string>{} : rows.front().posteriors.at(target).levels;
  const double bar = 14.0;
  const double gap = 24.0;
  const double left = 60.0;
  const double top = 40.0;
  const double plot_h = 260.0;
  const double group_w = bar * static_cast<double>(std::max<std::size_t>(rows.size(), 1)) + gap;
  const double plot_w = group_w * static_cast<double>(std::max<std::size_t>(levels.size(), 1));
  const double legend_w = 220.0;
  const double width = left + plot_w + legend_w;
  const double height =
      std::max(top + plot_h + 60.0, top + 20.0 * static_cast<double>(rows.size()) + 40.0);

  std::string out = open_svg(width, height, options);
  out += text(left, 22, "P(" + name + ") across scenarios", "start", 14);
  // Axis with ticks at 0, 0.2, ..., 1.
  for (int t = 0; t <= 5; ++t) {
    const double y = top + plot_h - plot_h * t / 5.0;
    out += line(left - 4, y, left + plot_w, y, t == 0 ? "#000000" : "#dddddd");
    out += text(left - 8, y + 4, format_fixed(t / 5.0, 1), "end", 10);
  }
  out += line(left, top, left, top + plot_h);
  out += "<g id=\"bars\">\n";
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const double x0 = left + gap / 2 + group_w * static_cast<double>(l);
    out += "<g class=\"level\" data-level=\"" + xml_escape(levels[l]) + "\">\n";
    for (std::size_t s = 0; s < rows.size(); ++s) {
      const double p = rows[s].posteriors.at(target).distribution[static_cast<Eigen::Index>(l)];
      const double h = plot_h * std::clamp(p, 0.0, 1.0);
      out += rect(x0 + bar * static_cast<double>(s), top + plot_h - h, bar - 2, h,
                  kPalette[s % kPaletteSize]);
    }
    out += "</g>\n";
    out += text(x0 + (group_w - gap) / 2, top + plot_h + 18, levels[l], "middle", 11);
  }
  out += "</g>\n";
  const double lx = left + plot_w + 20;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    const double y = top + 20.0 * static_cast<double>(s);
    out += rect(lx, y, 12, 12, kPalette[s % kPaletteSize]);
    out += text(lx + 18, y + 10, rows[s].scenario, "start", 11);
  }
  return out + "</svg>\n";
}

std::string tornado_svg(const std::vector<TornadoBar>& bars, const TargetEvent& event,
                        double delta, const SvgOptions& options) {
  const double label_w = 360.0;
  const double half = 200.0;
  const double row_h = 18.0;
  const double top = 60.0;
  const double width = label_w + 2 * half + 40.0;
  const double height = top + row_h * static_cast<double>(bars.size()) + 50.0;
  double peak = 0.0;
  for (const auto& b : bars) peak = std::max(peak, b.magnitude());
  const double scale = peak > 0.0 ? half / peak : 0.0;
  const double axis = label_w + half;

  std::string out = open_svg(width, height, options);
  out += text(10, 22, "Sensitivity of P(" + event.variable + " = " + event.state + ")", "start", 14);
  out += rect(10, 32, 12, 12, kIncrease);
  out += text(28, 42, "parameter + " + format_number(delta), "start", 11);
  out += rect(160, 32, 12, 12, kDecrease);
  out += text(178, 42, "parameter - " + format_number(delta), "start", 11);
  out += "<g id=\"bars\">\n";
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& b = bars[i];
    const double y = top + row_h * static_cast<double>(i);
    out += text(label_w - 8, y + 12, b.label, "end", 10);
    for (auto [shift, color] : {std::pair{b.shift_up, kIncrease}, std::pair{b.shift_down, kDecrease}}) {
      const double w = std::abs(shift) * scale;
      const double x = shift < 0 ? axis - w : axis;
      out += rect(x, y + 2, w, row_h - 4, color);
    }
  }
  out += "</g>\n";
  const double bottom = top + row_h * static_cast<double>(bars.size());
  out += line(axis, top - 4, axis, bottom + 4);
  out += line(label_w, bottom + 4, label_w + 2 * half, bottom + 4);
  out += text(label_w, bottom + 20, format_fixed(-peak, 4), "middle", 10);
  out += text(axis, bottom + 20, "0", "middle", 10);
  out += text(label_w + 2 * half, bottom + 20, format_fixed(peak, 4), "middle", 10);
  out += text(axis, bottom + 38, "change in probability", "middle", 11);
  return out + "</svg>\n";
}

}  // namespace beliefnet::report
