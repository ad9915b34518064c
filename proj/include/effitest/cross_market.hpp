#pragma once

#include <span>
#include <vector>

#include "effitest/series.hpp"

namespace effitest::cross {

/// Two price series on a shared calendar.
struct AlignedPair {
    std::vector<TradingDate> dates;
    std::vector<double> a_values;
    std::vector<double> b_values;
    std::size_t fill_count_a = 0;
    std::size_t fill_count_b = 0;
    std::vector<TradingDate> filled_dates_a;
    std::vector<TradingDate> filled_dates_b;

    [[nodiscard]] std::size_t size() const noexcept { return dates.size(); }
    [[nodiscard]] PriceSeries series_a(const std::string& name) const;
    [[nodiscard]] PriceSeries series_b(const std::string& name) const;
};

/// Union of both calendars inside the overlapping date range. A market closed
/// on a date the other traded carries its last close forward. Throws
/// StatError(Alignment) when the ranges do not overlap.
AlignedPair align(const PriceSeries& a, const PriceSeries& b);

/// Product-moment correlation. Throws StatError(ZeroVariance) for constant
/// input and StatError(InsufficientData) for fewer than 3 points.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace effitest::cross
