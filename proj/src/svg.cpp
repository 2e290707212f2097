#include "kelly/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

namespace kelly {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
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

}  // namespace

std::string capital_curve_svg(const CapitalPath& path,
                              const DrawdownRecord& drawdown,
                              const SvgPlotOptions& options) {
    const Eigen::Index n = path.values.size();
    if (n < 2 || path.dates.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("plot needs a path with >= 2 points");
    }

    const double margin_left = 70.0, margin_right = 20.0;
    const double margin_top = 40.0, margin_bottom = 50.0;
    const double plot_w = options.width - margin_left - margin_right;
    const double plot_h = options.height - margin_top - margin_bottom;

    const double x0 = static_cast<double>(path.dates.front().day_number());
    const double x1 = static_cast<double>(path.dates.back().day_number());
    const double x_span = std::max(x1 - x0, 1.0);
    auto x_of = [&](std::size_t t) {
        const double d = static_cast<double>(path.dates[t].day_number());
        return margin_left + (d - x0) / x_span * plot_w;
    };

    // Collect plottable y values; on a log scale, ruined zeros are clipped.
    std::vector<double> ys(static_cast<std::size_t>(n));
    std::vector<bool> ok(static_cast<std::size_t>(n), true);
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -y_min;
    for (Eigen::Index t = 0; t < n; ++t) {
        const double v = path.values(t);
        const auto i = static_cast<std::size_t>(t);
        if (options.log_scale) {
            if (v > 0.0) {
                ys[i] = std::log10(v);
            } else {
                ok[i] = false;
                continue;
            }
        } else {
            ys[i] = v;
        }
        y_min = std::min(y_min, ys[i]);
        y_max = std::max(y_max, ys[i]);
    }
    if (!(y_min < y_max)) {
        y_max = y_min + 1.0;
        y_min -= 1.0;
    }
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;
    auto y_of = [&](double y) {
        return margin_top + (y_max - y) / (y_max - y_min) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(options.width) + "\" height=\"" +
           std::to_string(options.height) + "\" viewBox=\"0 0 " +
           std::to_string(options.width) + " " +
           std::to_string(options.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(options.width / 2.0) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" +
           escape_xml(options.title) + "</text>\n";

    // Drawdown band.
    if (drawdown.fraction > 0.0 && drawdown.trough_index > drawdown.peak_index) {
        const double bx0 = x_of(drawdown.peak_index);
        const double bx1 = x_of(drawdown.trough_index);
        svg += "<rect x=\"" + num(bx0) + "\" y=\"" + num(margin_top) +
               "\" width=\"" + num(bx1 - bx0) + "\" height=\"" + num(plot_h) +
               "\" fill=\"#d62728\" fill-opacity=\"0.12\"/>\n";
    }

    // Axes.
    svg += "<rect x=\"" + num(margin_left) + "\" y=\"" + num(margin_top) +
           "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";

    // y ticks.
    const int n_yticks = 6;
    for (int i = 0; i < n_yticks; ++i) {
        const double y =
            y_min + (y_max - y_min) * i / static_cast<double>(n_yticks - 1);
        const double py = y_of(y);
        svg += "<line x1=\"" + num(margin_left - 4) + "\" y1=\"" + num(py) +
               "\" x2=\"" + num(margin_left + plot_w) + "\" y2=\"" + num(py) +
               "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + num(margin_left - 8) + "\" y=\"" + num(py + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">" +
               label(y) + "</text>\n";
    }

    // x ticks: evenly spaced dates.
    const int n_xticks = 6;
    for (int i = 0; i < n_xticks; ++i) {
        const auto t = static_cast<std::size_t>(
            (static_cast<double>(n - 1) * i) / (n_xticks - 1));
        const double px = x_of(t);
        svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(margin_top + plot_h) +
               "\" x2=\"" + num(px) + "\" y2=\"" +
               num(margin_top + plot_h + 4) + "\" stroke=\"#444\"/>\n";
        svg += "<text x=\"" + num(px) + "\" y=\"" +
               num(margin_top + plot_h + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">" +
               path.dates[t].to_string() + "</text>\n";
    }

    // Capital curve.
    std::string points;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (!ok[i]) continue;
        points += num(x_of(i)) + "," + num(y_of(ys[i])) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
           "points=\"" +
           points + "\"/>\n";

    if (options.log_scale) {
        svg += "<text x=\"16\" y=\"" + num(margin_top + plot_h / 2.0) +
               "\" transform=\"rotate(-90 16 " +
               num(margin_top + plot_h / 2.0) +
               ")\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"12\">log10 capital</text>\n";
    } else {
        svg += "<text x=\"16\" y=\"" + num(margin_top + plot_h / 2.0) +
               "\" transform=\"rotate(-90 16 " +
               num(margin_top + plot_h / 2.0) +
               ")\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"12\">capital</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace kelly
