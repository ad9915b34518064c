#pragma once

#include <span>
#include <string>
#include <vector>

#include "effitest/config.hpp"
#include "effitest/render.hpp"
#include "effitest/report.hpp"

namespace effitest::plots {

struct ProbabilityPoint {
    double theoretical;  ///< normal quantile at (i - 0.5) / n
    double sample;       ///< i-th order statistic, standardized by mean and sd
};

/// Normal probability plot coordinates. Throws StatError for n < 2 or zero variance.
std::vector<ProbabilityPoint> probability_plot_points(std::span<const double> values);

/// Density histogram: `bins` equal-width bins over [min, max].
struct Histogram {
    double lo = 0.0;
    double width = 0.0;
    std::vector<double> density;
};
Histogram histogram(std::span<const double> values, std::size_t bins);

/// SVG files under plots/<index>/<period>_<kind>.svg for every index and period:
/// price, returns, hist, qq, acf, hp. Output is byte-deterministic.
std::vector<RenderedFile> render_plots(const AnalysisOutput& output, const AnalysisConfig& config);

}  // namespace effitest::plots
