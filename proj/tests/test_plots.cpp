#include <gtest/gtest.h>

#include <cmath>

#include "effitest/distributions.hpp"
#include "effitest/errors.hpp"
#include "effitest/plots.hpp"
#include "test_support.hpp"

using namespace effitest;
using namespace effitest::plots;

namespace {

AnalysisOutput analyzed(std::vector<double> returns_override = {}) {
    AnalysisConfig config;
    config.scheme = PeriodScheme::parse("Full:2010-01-01:2012-12-31,H1:2010-01-01:2011-06-30,H2:2011-07-01:2012-12-31");
    config.acf_mode = randomness::AcfMode::Appendix;
    const auto dates = testsupport::weekdays(TradingDate(2010, 1, 4), 700);
    auto px = testsupport::price_path(dates.size(), 3);
    if (!returns_override.empty()) px = returns_override;
    LoadedInput in;
    in.prices = testsupport::prices_on("AAA", dates, px);
    in.returns = compute_returns(in.prices);
    return analyze_series(config, {in});
}

}  // namespace

TEST(ProbabilityPlot, NormalSampleStaysNearDiagonal) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (std::size_t n : {100u, 1000u, 5000u}) {
            const auto x = testsupport::gaussian(n, seed * 31 + n, 0.001, 0.02);
            const auto pts = probability_plot_points(x);
            ASSERT_EQ(pts.size(), n);
            const double bound = 4.0 / std::sqrt(static_cast<double>(n));
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double p = (i + 0.5) / n;
                EXPECT_NEAR(pts[i].theoretical, stats::normal_icdf(p), 1e-15);
                // Kolmogorov-style band in probability space.
                worst = std::max(worst, std::fabs(stats::normal_cdf(pts[i].sample) - p));
            }
            EXPECT_LE(worst, bound) << "n=" << n << " seed=" << seed;
            // In quantile units the same band holds over the central range.
            for (std::size_t i = n / 10; i < n - n / 10; ++i) {
                EXPECT_LE(std::fabs(pts[i].sample - pts[i].theoretical), bound * 4.0);
            }
        }
    }
}

TEST(ProbabilityPlot, Degenerate) {
    EXPECT_THROW((void)probability_plot_points(std::vector<double>{1.0}), StatError);
    EXPECT_THROW((void)probability_plot_points(std::vector<double>(10, 3.0)), StatError);
}

TEST(Histogram, DensityIntegratesToOne) {
    const auto x = testsupport::gaussian(1000, 4);
    const auto h = histogram(x, 25);
    double area = 0;
    for (double d : h.density) area += d * h.width;
    EXPECT_NEAR(area, 1.0, 1e-12);
}

TEST(Plots, OneSetPerIndexAndPeriod) {
    const auto out = analyzed();
    AnalysisConfig config;
    config.scheme = PeriodScheme::parse("Full:2010-01-01:2012-12-31,H1:2010-01-01:2011-06-30,H2:2011-07-01:2012-12-31");
    const auto files = render_plots(out, config);
    EXPECT_EQ(files.size(), 3u * 6u);
    for (const auto& f : files) {
        EXPECT_EQ(f.content.rfind("<svg", 0), 0u) << f.filename;
        EXPECT_NE(f.content.find("</svg>"), std::string::npos);
        EXPECT_EQ(f.content.find("href"), std::string::npos);  // self-contained
    }
    EXPECT_EQ(files[0].filename, "plots/AAA/Full_price.svg");
    const auto again = render_plots(analyzed(), config);
    ASSERT_EQ(again.size(), files.size());
    for (std::size_t i = 0; i < files.size(); ++i) EXPECT_EQ(again[i].content, files[i].content);
}

TEST(Plots, AcfBandsUseAppendixStandardError) {
    const auto out = analyzed();
    AnalysisConfig config;
    config.scheme = PeriodScheme::parse("Full:2010-01-01:2012-12-31,H1:2010-01-01:2011-06-30,H2:2011-07-01:2012-12-31");
    const auto& acf = *out.report.indices[0].periods[0].acf;
    EXPECT_NEAR(acf.se(), 1.0 / std::sqrt(static_cast<double>(acf.n)), 1e-15);
    const auto files = render_plots(out, config);
    const auto it = std::find_if(files.begin(), files.end(), [](const auto& f) { return f.filename == "plots/AAA/Full_acf.svg"; });
    ASSERT_NE(it, files.end());
    EXPECT_NE(it->content.find("stroke-dasharray"), std::string::npos);
}

TEST(Plots, ConstantReturnsGetPlaceholder) {
    const auto dates = testsupport::weekdays(TradingDate(2010, 1, 4), 700);
    std::vector<double> px(dates.size());
    for (std::size_t i = 0; i < px.size(); ++i) px[i] = std::pow(1.001, static_cast<double>(i)) * 100.0;
    // Exactly constant returns in H2: the price is already flat on the last H1 day.
    for (std::size_t i = 0; i < px.size(); ++i) {
        if (dates[i] >= TradingDate(2011, 6, 30)) px[i] = 150.0;
    }
    const auto out = analyzed(px);
    AnalysisConfig config;
    config.scheme = PeriodScheme::parse("Full:2010-01-01:2012-12-31,H1:2010-01-01:2011-06-30,H2:2011-07-01:2012-12-31");
    const auto files = render_plots(out, config);
    const auto it = std::find_if(files.begin(), files.end(), [](const auto& f) { return f.filename == "plots/AAA/H2_hist.svg"; });
    ASSERT_NE(it, files.end());
    EXPECT_NE(it->content.find("zero variance"), std::string::npos);
    EXPECT_FALSE(out.report.warnings.empty());
}
