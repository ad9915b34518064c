#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace effitest {

/// Calendar date of one trading session. Construction validates the date.
class TradingDate {
public:
    TradingDate() = default;
    TradingDate(int year, int month, int day);

    /// Parses `YYYY-MM-DD`; returns nullopt when malformed or not a real date.
    static std::optional<TradingDate> parse_iso(std::string_view text);
    static TradingDate from_serial(std::int64_t days_since_epoch);

    [[nodiscard]] int year() const noexcept { return year_; }
    [[nodiscard]] int month() const noexcept { return month_; }
    [[nodiscard]] int day() const noexcept { return day_; }

    /// Days since 1970-01-01.
    [[nodiscard]] std::int64_t serial() const;
    /// 0 = Monday ... 6 = Sunday.
    [[nodiscard]] int weekday() const;
    [[nodiscard]] std::string iso() const;

    friend auto operator<=>(const TradingDate&, const TradingDate&) = default;

private:
    int year_ = 1970;
    int month_ = 1;
    int day_ = 1;
};

bool is_valid_date(int year, int month, int day);

/// One dated value: a price for PriceSeries, a return for ReturnSeries.
struct Observation {
    TradingDate date;
    double value = 0.0;

    friend bool operator==(const Observation&, const Observation&) = default;
};

namespace detail {

/// Dated sequence with strictly increasing dates. `Tag` keeps prices and
/// returns from being mixed up at call sites.
template <typename Tag>
class DatedSeries {
public:
    DatedSeries() = default;
    DatedSeries(std::string name, std::vector<Observation> observations)
        : name_(std::move(name)), observations_(std::move(observations)) {
        Tag::validate(name_, observations_);
    }

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<Observation>& observations() const noexcept { return observations_; }
    [[nodiscard]] std::size_t size() const noexcept { return observations_.size(); }
    [[nodiscard]] bool empty() const noexcept { return observations_.empty(); }
    [[nodiscard]] const Observation& operator[](std::size_t i) const { return observations_[i]; }
    [[nodiscard]] std::vector<double> values() const {
        std::vector<double> out;
        out.reserve(observations_.size());
        for (const auto& o : observations_) out.push_back(o.value);
        return out;
    }

    friend bool operator==(const DatedSeries&, const DatedSeries&) = default;

private:
    std::string name_;
    std::vector<Observation> observations_;
};

struct PriceTag {
    static void validate(const std::string& name, const std::vector<Observation>& obs);
};
struct ReturnTag {
    static void validate(const std::string& name, const std::vector<Observation>& obs);
};

}  // namespace detail

/// Closing prices: dates strictly increasing, all prices > 0. Empty slices are
/// allowed (segmentation may produce them); length >= 2 is checked where returns
/// are computed.
using PriceSeries = detail::DatedSeries<detail::PriceTag>;
/// Simple daily returns, each > -1, dated at the later price.
using ReturnSeries = detail::DatedSeries<detail::ReturnTag>;

struct Period {
    std::string label;
    TradingDate start;  // inclusive
    TradingDate end;    // inclusive

    [[nodiscard]] bool contains(const TradingDate& d) const { return start <= d && d <= end; }
    friend bool operator==(const Period&, const Period&) = default;
};

/// Named date partition. The first entry may span the others (the "Full"
/// column); all remaining entries must be ordered and non-overlapping.
class PeriodScheme {
public:
    PeriodScheme() = default;
    explicit PeriodScheme(std::vector<Period> periods);

    [[nodiscard]] const std::vector<Period>& periods() const noexcept { return periods_; }
    [[nodiscard]] std::size_t size() const noexcept { return periods_.size(); }

    /// Parses `label:YYYY-MM-DD:YYYY-MM-DD,label:...`, or `default`.
    static PeriodScheme parse(std::string_view text);
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PeriodScheme&, const PeriodScheme&) = default;

private:
    std::vector<Period> periods_;
};

/// Full sample plus the four crisis-delimited sub-periods (I..IV).
PeriodScheme default_scheme();

ReturnSeries compute_returns(const PriceSeries& prices);

template <typename Series>
struct Segmented {
    std::vector<std::pair<std::string, Series>> parts;  // scheme order
    std::vector<std::string> warnings;

    [[nodiscard]] const Series& at(std::string_view label) const;
};

Segmented<PriceSeries> segment(const PriceSeries& series, const PeriodScheme& scheme);
Segmented<ReturnSeries> segment(const ReturnSeries& series, const PeriodScheme& scheme);

}  // namespace effitest
