#pragma once

#include <cstddef>
#include <span>

#include "effitest/series.hpp"
#include "effitest/test_result.hpp"

namespace effitest::stats {

/// Sample moments of a return series. Skewness and kurtosis use population
/// central moments (divisor n); kurtosis is raw, so a normal sample gives ~3.
/// The standard deviation uses divisor n - 1.
struct DescriptiveStats {
    std::size_t n = 0;
    double mean = 0.0;
    double max = 0.0;
    double min = 0.0;
    double std_dev = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;

    friend bool operator==(const DescriptiveStats&, const DescriptiveStats&) = default;
};

/// Throws StatError(InsufficientData) for n < 2 and StatError(ZeroVariance) for
/// constant input.
DescriptiveStats describe(std::span<const double> values);
DescriptiveStats describe(const ReturnSeries& returns);

/// JB = n * (S^2 / 6 + (K - 3)^2 / 24), p from chi-square with 2 d.o.f.
TestResult jarque_bera(const DescriptiveStats& stats);

}  // namespace effitest::stats
