#include "mocbandit/app/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace mocbandit::app {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 200.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 70.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v)
{
    char buf[32];
    if (v != 0.0 && (std::abs(v) >= 1e5 || std::abs(v) < 1e-2))
        std::snprintf(buf, sizeof buf, "%.2g", v);
    else
        std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
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

} // namespace

std::string render_line_plot(const PlotSpec& spec, const std::vector<PlotSeries>& series)
{
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = std::numeric_limits<double>::infinity(), ymax = -ymin;
    for (const auto& s : series) {
        for (double v : s.x) {
            xmin = std::min(xmin, v);
            xmax = std::max(xmax, v);
        }
        for (double v : s.y) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = 0.0;
        xmax = 1.0;
    }
    if (!std::isfinite(ymin)) {
        ymin = 0.0;
        ymax = 1.0;
    }
    ymin = std::min(ymin, 0.0);
    if (xmax <= xmin)
        xmax = xmin + 1.0;
    if (ymax <= ymin)
        ymax = ymin + 1.0;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    const auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    const auto py = [&](double y) { return kTop + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"960\" height=\"540\" viewBox=\"0 0 960 540\" "
           "font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"960\" height=\"540\" fill=\"white\"/>\n";
    svg << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
        << escape(spec.title) << "</text>\n";
    svg << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(pw) << "\" height=\""
        << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

    // x ticks: the checkpoint closest to each fifth of the axis
    std::vector<double> xt;
    if (!spec.x_ticks.empty()) {
        for (int k = 0; k <= 5; ++k) {
            const double target = xmin + (xmax - xmin) * k / 5.0;
            const double best = *std::min_element(spec.x_ticks.begin(), spec.x_ticks.end(), [&](double a, double b) {
                return std::abs(a - target) < std::abs(b - target);
            });
            if (xt.empty() || xt.back() != best)
                xt.push_back(best);
        }
    } else {
        for (int k = 0; k <= 5; ++k)
            xt.push_back(xmin + (xmax - xmin) * k / 5.0);
    }
    for (double v : xt) {
        const double x = px(v);
        svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop + ph) << "\" x2=\"" << fmt(x) << "\" y2=\""
            << fmt(kTop + ph + 6) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kTop + ph + 20) << "\" text-anchor=\"middle\">"
            << tick_label(v) << "</text>\n";
    }
    for (int k = 0; k <= 5; ++k) {
        const double v = ymin + (ymax - ymin) * k / 5.0;
        const double y = py(v);
        svg << "<line x1=\"" << fmt(kLeft - 6) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(kLeft) << "\" y2=\""
            << fmt(y) << "\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(kLeft + pw) << "\" y2=\""
            << fmt(y) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << fmt(kLeft - 10) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">"
            << tick_label(v) << "</text>\n";
    }
    svg << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 20) << "\" text-anchor=\"middle\">"
        << escape(spec.x_label) << "</text>\n";
    svg << "<text transform=\"translate(24," << fmt(kTop + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
        << escape(spec.y_label) << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* color = kPalette[i % std::size(kPalette)];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t j = 0; j < std::min(s.x.size(), s.y.size()); ++j)
            svg << (j ? " " : "") << fmt(px(s.x[j])) << ',' << fmt(py(s.y[j]));
        svg << "\"/>\n";
        const double ly = kTop + 10 + 22.0 * static_cast<double>(i);
        const double lx = kLeft + pw + 20;
        svg << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(lx + 30) << "\" y2=\""
            << fmt(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fmt(lx + 38) << "\" y=\"" << fmt(ly + 4) << "\">" << escape(s.label) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace mocbandit::app
