#include "effitest/cross_market.hpp"

#include <algorithm>
#include <cmath>

#include "effitest/errors.hpp"

namespace effitest::cross {

namespace {

PriceSeries make_series(const std::string& name, const std::vector<TradingDate>& dates,
                        const std::vector<double>& values) {
    std::vector<Observation> obs;
    obs.reserve(dates.size());
    for (std::size_t i = 0; i < dates.size(); ++i) obs.push_back({dates[i], values[i]});
    return PriceSeries(name, std::move(obs));
}

}  // namespace

PriceSeries AlignedPair::series_a(const std::string& name) const { return make_series(name, dates, a_values); }
PriceSeries AlignedPair::series_b(const std::string& name) const { return make_series(name, dates, b_values); }

AlignedPair align(const PriceSeries& a, const PriceSeries& b) {
    if (a.empty() || b.empty()) throw StatError(StatErrorKind::Alignment, "align: empty series");
    const TradingDate start = std::max(a[0].date, b[0].date);
    const TradingDate end = std::min(a[a.size() - 1].date, b[b.size() - 1].date);
    if (end < start) {
        throw StatError(StatErrorKind::Alignment,
                        "align: '" + a.name() + "' and '" + b.name() + "' have no overlapping dates");
    }

    AlignedPair out;
    const auto& oa = a.observations();
    const auto& ob = b.observations();
    std::size_t ia = 0, ib = 0;
    // Last close at or before the current date, carried across the overlap start.
    double last_a = 0.0, last_b = 0.0;
    while (ia < oa.size() || ib < ob.size()) {
        TradingDate d;
        if (ib >= ob.size() || (ia < oa.size() && oa[ia].date < ob[ib].date)) {
            d = oa[ia].date;
        } else {
            d = ob[ib].date;
        }
        const bool has_a = ia < oa.size() && oa[ia].date == d;
        const bool has_b = ib < ob.size() && ob[ib].date == d;
        if (has_a) last_a = oa[ia++].value;
        if (has_b) last_b = ob[ib++].value;
        if (d < start) continue;
        if (end < d) break;
        out.dates.push_back(d);
        out.a_values.push_back(last_a);
        out.b_values.push_back(last_b);
        if (!has_a) {
            ++out.fill_count_a;
            out.filled_dates_a.push_back(d);
        }
        if (!has_b) {
            ++out.fill_count_b;
            out.filled_dates_b.push_back(d);
        }
    }
    return out;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw StatError(StatErrorKind::Domain, "pearson: length mismatch");
    const std::size_t n = x.size();
    if (n < 3) throw StatError(StatErrorKind::InsufficientData, "pearson: need at least 3 points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) throw StatError(StatErrorKind::ZeroVariance, "pearson: constant input");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace effitest::cross
