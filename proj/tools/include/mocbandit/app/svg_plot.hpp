#pragma once

#include <string>
#include <vector>

namespace mocbandit::app {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> x_ticks; // candidate tick positions (checkpoint rounds)
};

/// Self-contained 960x540 SVG line chart with linear axes and a legend.
[[nodiscard]] std::string render_line_plot(const PlotSpec& spec, const std::vector<PlotSeries>& series);

} // namespace mocbandit::app
