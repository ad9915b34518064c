#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "effitest/series.hpp"

namespace effitest::ingest {

enum class DateFormat {
    YearMonthDay,  ///< 2016-04-08
    DayMonthYear,  ///< 08/04/2016
    MonthDayYear,  ///< 04/08/2016
};

std::optional<DateFormat> parse_date_format(std::string_view text);
std::string to_string(DateFormat format);

/// Column layout of a quote-provider CSV export.
///
/// When `price_column` is empty the parser looks for `Adj Close` and falls back
/// to `Close`. A decimal comma implies `;` as the field delimiter.
struct CsvSchema {
    std::string date_column = "Date";
    std::string price_column;
    DateFormat date_format = DateFormat::YearMonthDay;
    char decimal_separator = '.';

    [[nodiscard]] char delimiter() const noexcept { return decimal_separator == ',' ? ';' : ','; }
    void validate() const;
};

struct DropRecord {
    std::size_t row = 0;  ///< 1-based data row (header excluded)
    std::string reason;
};

struct IngestReport {
    std::size_t rows_read = 0;
    std::size_t rows_dropped = 0;
    std::vector<DropRecord> drop_reasons;
    std::optional<std::pair<TradingDate, TradingDate>> date_range;
    bool reordered = false;
    std::string price_column_used;
};

struct ParsedPrices {
    PriceSeries series;
    IngestReport report;
};

/// Parses CSV text into a validated price series. Bad rows are dropped and
/// recorded; duplicate dates keep the last occurrence.
ParsedPrices parse_price_csv(std::string_view content, const CsvSchema& schema, const std::string& index_name);

/// Reads a file and parses it. Throws InputError(Io) when unreadable.
ParsedPrices load_price_csv(const std::string& path, const CsvSchema& schema, const std::string& index_name);

/// Writes `Date,Close` with ISO dates and shortest round-trip decimals.
std::string write_price_csv(const PriceSeries& series);

}  // namespace effitest::ingest
