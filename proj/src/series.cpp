#include "effitest/series.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include "effitest/errors.hpp"

namespace effitest {

namespace {

std::chrono::year_month_day to_ymd(int y, int m, int d) {
    return std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                       std::chrono::day{static_cast<unsigned>(d)}};
}

bool parse_int(std::string_view text, int& out) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

bool is_valid_date(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1 || day > 31 || year < 1 || year > 9999) return false;
    return to_ymd(year, month, day).ok();
}

TradingDate::TradingDate(int year, int month, int day) : year_(year), month_(month), day_(day) {
    if (!is_valid_date(year, month, day)) {
        throw InputError(InputErrorKind::InvalidInput, "invalid calendar date " + std::to_string(year) + "-" +
                                                            std::to_string(month) + "-" + std::to_string(day));
    }
}

std::optional<TradingDate> TradingDate::parse_iso(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    int y = 0, m = 0, d = 0;
    if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), m) || !parse_int(text.substr(8, 2), d)) {
        return std::nullopt;
    }
    if (!is_valid_date(y, m, d)) return std::nullopt;
    return TradingDate(y, m, d);
}

TradingDate TradingDate::from_serial(std::int64_t days_since_epoch) {
    const std::chrono::sys_days sd{std::chrono::days{days_since_epoch}};
    const std::chrono::year_month_day ymd{sd};
    return TradingDate(static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
                       static_cast<int>(static_cast<unsigned>(ymd.day())));
}

std::int64_t TradingDate::serial() const {
    return std::chrono::sys_days{to_ymd(year_, month_, day_)}.time_since_epoch().count();
}

int TradingDate::weekday() const {
    // 1970-01-01 was a Thursday.
    const auto s = serial();
    return static_cast<int>(((s % 7) + 7 + 3) % 7);
}

std::string TradingDate::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year_, month_, day_);
    return buf;
}

namespace detail {

namespace {

void check_increasing(const std::string& name, const std::vector<Observation>& obs) {
    for (std::size_t i = 1; i < obs.size(); ++i) {
        if (!(obs[i - 1].date < obs[i].date)) {
            throw InputError(InputErrorKind::InvalidInput,
                             "series '" + name + "': dates not strictly increasing at " + obs[i].date.iso());
        }
    }
}

}  // namespace

void PriceTag::validate(const std::string& name, const std::vector<Observation>& obs) {
    check_increasing(name, obs);
    for (const auto& o : obs) {
        if (!std::isfinite(o.value) || o.value <= 0.0) {
            throw InputError(InputErrorKind::InvalidInput,
                             "series '" + name + "': non-positive price on " + o.date.iso());
        }
    }
}

void ReturnTag::validate(const std::string& name, const std::vector<Observation>& obs) {
    check_increasing(name, obs);
    for (const auto& o : obs) {
        if (!std::isfinite(o.value) || o.value <= -1.0) {
            throw InputError(InputErrorKind::InvalidInput,
                             "series '" + name + "': return <= -1 on " + o.date.iso());
        }
    }
}

}  // namespace detail

PeriodScheme::PeriodScheme(std::vector<Period> periods) : periods_(std::move(periods)) {
    if (periods_.empty()) throw ConfigError("period scheme has no periods");
    std::set<std::string> labels;
    for (const auto& p : periods_) {
        if (p.label.empty()) throw ConfigError("period scheme: empty label");
        if (!labels.insert(p.label).second) throw ConfigError("period scheme: duplicate label '" + p.label + "'");
        if (p.end < p.start) throw ConfigError("period scheme: period '" + p.label + "' ends before it starts");
    }
    // A leading envelope period (covering every other period) is the full-sample column.
    std::size_t first = 0;
    if (periods_.size() > 1) {
        const auto& env = periods_.front();
        const bool envelope = std::all_of(periods_.begin() + 1, periods_.end(), [&](const Period& p) {
            return env.start <= p.start && p.end <= env.end;
        });
        if (envelope) first = 1;
    }
    for (std::size_t i = first + 1; i < periods_.size(); ++i) {
        if (!(periods_[i - 1].end < periods_[i].start)) {
            throw ConfigError("period scheme: periods '" + periods_[i - 1].label + "' and '" + periods_[i].label +
                              "' overlap or are out of order");
        }
    }
}

PeriodScheme PeriodScheme::parse(std::string_view text) {
    if (text == "default" || text.empty()) return default_scheme();
    std::vector<Period> periods;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const auto item = text.substr(pos, comma - pos);
        const auto c1 = item.find(':');
        const auto c2 = c1 == std::string_view::npos ? c1 : item.find(':', c1 + 1);
        if (c2 == std::string_view::npos) {
            throw ConfigError("period scheme entry '" + std::string(item) + "' is not label:start:end");
        }
        const auto start = TradingDate::parse_iso(item.substr(c1 + 1, c2 - c1 - 1));
        const auto end = TradingDate::parse_iso(item.substr(c2 + 1));
        if (!start || !end) throw ConfigError("period scheme entry '" + std::string(item) + "' has a bad date");
        periods.push_back({std::string(item.substr(0, c1)), *start, *end});
        pos = comma + 1;
    }
    return PeriodScheme(std::move(periods));
}

std::string PeriodScheme::to_string() const {
    std::string out;
    for (const auto& p : periods_) {
        if (!out.empty()) out += ',';
        out += p.label + ':' + p.start.iso() + ':' + p.end.iso();
    }
    return out;
}

PeriodScheme default_scheme() {
    return PeriodScheme({
        {"Full", TradingDate(1996, 1, 1), TradingDate(2016, 4, 8)},
        {"I", TradingDate(1996, 1, 1), TradingDate(2007, 11, 30)},
        {"II", TradingDate(2007, 12, 1), TradingDate(2009, 6, 30)},
        {"III", TradingDate(2009, 7, 1), TradingDate(2015, 5, 31)},
        {"IV", TradingDate(2015, 6, 1), TradingDate(2016, 4, 8)},
    });
}

ReturnSeries compute_returns(const PriceSeries& prices) {
    if (prices.size() < 2) {
        throw InputError(InputErrorKind::InvalidInput,
                         "series '" + prices.name() + "' has fewer than 2 prices; cannot compute returns");
    }
    std::vector<Observation> out;
    out.reserve(prices.size() - 1);
    for (std::size_t i = 1; i < prices.size(); ++i) {
        const double prev = prices[i - 1].value;
        out.push_back({prices[i].date, (prices[i].value - prev) / prev});
    }
    return ReturnSeries(prices.name(), std::move(out));
}

template <typename Series>
const Series& Segmented<Series>::at(std::string_view label) const {
    for (const auto& [l, s] : parts) {
        if (l == label) return s;
    }
    throw ConfigError("no period labelled '" + std::string(label) + "'");
}

template struct Segmented<PriceSeries>;
template struct Segmented<ReturnSeries>;

namespace {

template <typename Series>
Segmented<Series> segment_impl(const Series& series, const PeriodScheme& scheme) {
    Segmented<Series> out;
    const auto& obs = series.observations();
    for (const auto& period : scheme.periods()) {
        auto lo = std::lower_bound(obs.begin(), obs.end(), period.start,
                                   [](const Observation& o, const TradingDate& d) { return o.date < d; });
        auto hi = std::upper_bound(obs.begin(), obs.end(), period.end,
                                   [](const TradingDate& d, const Observation& o) { return d < o.date; });
        std::vector<Observation> slice(lo, hi);
        if (slice.empty()) {
            out.warnings.push_back("series '" + series.name() + "': period '" + period.label + "' (" +
                                   period.start.iso() + ".." + period.end.iso() + ") has no observations");
        }
        out.parts.emplace_back(period.label, Series(series.name(), std::move(slice)));
    }
    return out;
}

}  // namespace

Segmented<PriceSeries> segment(const PriceSeries& series, const PeriodScheme& scheme) {
    return segment_impl(series, scheme);
}

Segmented<ReturnSeries> segment(const ReturnSeries& series, const PeriodScheme& scheme) {
    return segment_impl(series, scheme);
}

}  // namespace effitest
