#include "effitest/descriptive.hpp"

#include <algorithm>
#include <cmath>

#include "effitest/distributions.hpp"
#include "effitest/errors.hpp"

namespace effitest::stats {

DescriptiveStats describe(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) {
        throw StatError(StatErrorKind::InsufficientData,
                        "describe: need at least 2 observations, got " + std::to_string(n));
    }
    DescriptiveStats s;
    s.n = n;
    double sum = 0.0;
    s.min = values[0];
    s.max = values[0];
    for (double v : values) {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / static_cast<double>(n);

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double d = v - s.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    if (m2 == 0.0 || s.min == s.max) throw StatError(StatErrorKind::ZeroVariance, "describe: zero variance");
    const double nn = static_cast<double>(n);
    s.std_dev = std::sqrt(m2 / (nn - 1.0));
    m2 /= nn;
    m3 /= nn;
    m4 /= nn;
    s.skewness = m3 / std::pow(m2, 1.5);
    s.kurtosis = m4 / (m2 * m2);
    // The mean can drift a few ulps outside [min, max] for near-constant input.
    s.mean = std::clamp(s.mean, s.min, s.max);
    return s;
}

DescriptiveStats describe(const ReturnSeries& returns) {
    const auto v = returns.values();
    return describe(std::span<const double>(v));
}

TestResult jarque_bera(const DescriptiveStats& stats) {
    if (!std::isfinite(stats.skewness) || !std::isfinite(stats.kurtosis)) {
        throw StatError(StatErrorKind::Domain, "jarque_bera: skewness/kurtosis undefined");
    }
    const double excess = stats.kurtosis - 3.0;
    TestResult r;
    r.test_name = "jarque_bera";
    r.statistic = static_cast<double>(stats.n) * (stats.skewness * stats.skewness / 6.0 + excess * excess / 24.0);
    r.p_value = chi2_sf(r.statistic, 2);
    r.reject_at_5pct = r.p_value < 0.05;
    r.auxiliary = {{"n", static_cast<double>(stats.n)}, {"skewness", stats.skewness}, {"kurtosis", stats.kurtosis}};
    return r;
}

}  // namespace effitest::stats
