#pragma once

#include <string>

#include "kelly/backtest.hpp"

namespace kelly {

struct SvgPlotOptions {
    std::string title;
    bool log_scale = false;  // plot log10 of capital instead of capital
    int width = 960;
    int height = 480;
};

/// Static SVG of a capital curve over calendar time, with the maximum
/// drawdown window shaded. With log_scale the y axis is log10(capital);
/// zero capital after ruin is clipped out of a log-scale plot.
std::string capital_curve_svg(const CapitalPath& path,
                              const DrawdownRecord& drawdown,
                              const SvgPlotOptions& options);

}  // namespace kelly
