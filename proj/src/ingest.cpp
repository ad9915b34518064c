#include "effitest/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "effitest/errors.hpp"

namespace effitest::ingest {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Splits one CSV record, honouring double quotes ("" is an escaped quote).
std::vector<std::string> split_record(std::string_view line, char delim) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == delim) {
            fields.emplace_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.emplace_back(trim(cur));
    return fields;
}

bool parse_int(std::string_view text, int& out) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

std::optional<TradingDate> parse_date(std::string_view text, DateFormat format) {
    if (format == DateFormat::YearMonthDay) return TradingDate::parse_iso(text);
    const auto s1 = text.find('/');
    const auto s2 = s1 == std::string_view::npos ? s1 : text.find('/', s1 + 1);
    if (s2 == std::string_view::npos) return std::nullopt;
    int a = 0, b = 0, y = 0;
    if (!parse_int(text.substr(0, s1), a) || !parse_int(text.substr(s1 + 1, s2 - s1 - 1), b) ||
        !parse_int(text.substr(s2 + 1), y) || text.size() - s2 - 1 != 4) {
        return std::nullopt;
    }
    const int d = format == DateFormat::DayMonthYear ? a : b;
    const int m = format == DateFormat::DayMonthYear ? b : a;
    if (!is_valid_date(y, m, d)) return std::nullopt;
    return TradingDate(y, m, d);
}

enum class PriceStatus { Ok, Missing, NonNumeric, NonPositive };

PriceStatus parse_price(std::string_view text, char decimal, double& out) {
    if (text.empty()) return PriceStatus::Missing;
    std::string normalized(text);
    if (decimal != '.') {
        if (normalized.find('.') != std::string::npos) return PriceStatus::NonNumeric;
        std::replace(normalized.begin(), normalized.end(), decimal, '.');
    }
    const char* first = normalized.data();
    const char* last = first + normalized.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::fixed | std::chars_format::scientific);
    if (ec != std::errc{} || ptr != last || !std::isfinite(out)) return PriceStatus::NonNumeric;
    if (out <= 0.0) return PriceStatus::NonPositive;
    return PriceStatus::Ok;
}

std::ptrdiff_t find_column(const std::vector<std::string>& header, const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : it - header.begin();
}

}  // namespace

std::optional<DateFormat> parse_date_format(std::string_view text) {
    if (text == "YYYY-MM-DD" || text == "ymd") return DateFormat::YearMonthDay;
    if (text == "DD/MM/YYYY" || text == "dmy") return DateFormat::DayMonthYear;
    if (text == "MM/DD/YYYY" || text == "mdy") return DateFormat::MonthDayYear;
    return std::nullopt;
}

std::string to_string(DateFormat format) {
    switch (format) {
        case DateFormat::YearMonthDay: return "YYYY-MM-DD";
        case DateFormat::DayMonthYear: return "DD/MM/YYYY";
        case DateFormat::MonthDayYear: return "MM/DD/YYYY";
    }
    return "YYYY-MM-DD";
}

void CsvSchema::validate() const {
    if (date_column.empty()) throw ConfigError("CSV schema: date column name is empty");
    if (date_column == price_column) throw ConfigError("CSV schema: date and price columns must differ");
    if (decimal_separator != '.' && decimal_separator != ',') {
        throw ConfigError("CSV schema: decimal separator must be '.' or ','");
    }
}

ParsedPrices parse_price_csv(std::string_view content, const CsvSchema& schema, const std::string& index_name) {
    schema.validate();
    if (content.size() >= 3 && static_cast<unsigned char>(content[0]) == 0xEF &&
        static_cast<unsigned char>(content[1]) == 0xBB && static_cast<unsigned char>(content[2]) == 0xBF) {
        content.remove_prefix(3);
    }

    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos < content.size();) {
        auto nl = content.find('\n', pos);
        if (nl == std::string_view::npos) nl = content.size();
        lines.push_back(content.substr(pos, nl - pos));
        pos = nl + 1;
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw InputError(InputErrorKind::EmptyInput, "'" + index_name + "': no header row");

    const char delim = schema.delimiter();
    const auto header = split_record(lines.front(), delim);
    const auto date_idx = find_column(header, schema.date_column);
    if (date_idx < 0) {
        throw InputError(InputErrorKind::Schema, "'" + index_name + "': missing column '" + schema.date_column + "'");
    }
    std::string price_name = schema.price_column;
    std::ptrdiff_t price_idx = -1;
    if (price_name.empty()) {
        for (const char* candidate : {"Adj Close", "Close"}) {
            price_idx = find_column(header, candidate);
            if (price_idx >= 0) {
                price_name = candidate;
                break;
            }
        }
        if (price_idx < 0) {
            throw InputError(InputErrorKind::Schema, "'" + index_name + "': missing column 'Adj Close' or 'Close'");
        }
    } else {
        price_idx = find_column(header, price_name);
        if (price_idx < 0) {
            throw InputError(InputErrorKind::Schema, "'" + index_name + "': missing column '" + price_name + "'");
        }
    }

    IngestReport report;
    report.price_column_used = price_name;
    struct Row {
        std::size_t row;
        Observation obs;
    };
    std::vector<Row> rows;
    auto drop = [&](std::size_t row, std::string reason) {
        ++report.rows_dropped;
        report.drop_reasons.push_back({row, std::move(reason)});
    };

    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (trim(lines[li]).empty()) continue;
        const std::size_t row = ++report.rows_read;
        const auto fields = split_record(lines[li], delim);
        const auto need = static_cast<std::size_t>(std::max(date_idx, price_idx));
        if (fields.size() <= need) {
            drop(row, "too few fields");
            continue;
        }
        // An unquoted thousands separator shows up as an extra field.
        if (fields.size() > header.size()) {
            drop(row, "too many fields");
            continue;
        }
        const auto date = parse_date(fields[date_idx], schema.date_format);
        if (!date) {
            drop(row, "unparseable date");
            continue;
        }
        double price = 0.0;
        switch (parse_price(fields[price_idx], schema.decimal_separator, price)) {
            case PriceStatus::Missing: drop(row, "missing price"); continue;
            case PriceStatus::NonNumeric: drop(row, "non-numeric price"); continue;
            case PriceStatus::NonPositive: drop(row, "non-positive price"); continue;
            case PriceStatus::Ok: break;
        }
        rows.push_back({row, {*date, price}});
    }

    report.reordered = !std::is_sorted(rows.begin(), rows.end(),
                                       [](const Row& a, const Row& b) { return a.obs.date < b.obs.date; });
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.obs.date < b.obs.date; });

    // Keep the last occurrence (by file row) of each date.
    std::vector<Observation> kept;
    std::vector<DropRecord> dup_drops;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i + 1 < rows.size() && rows[i + 1].obs.date == rows[i].obs.date) {
            dup_drops.push_back({rows[i].row, "duplicate date " + rows[i].obs.date.iso() + " superseded by a later row"});
            continue;
        }
        kept.push_back(rows[i].obs);
    }
    for (auto& d : dup_drops) {
        ++report.rows_dropped;
        report.drop_reasons.push_back(std::move(d));
    }
    std::stable_sort(report.drop_reasons.begin(), report.drop_reasons.end(),
                     [](const DropRecord& a, const DropRecord& b) { return a.row < b.row; });

    if (kept.empty()) throw InputError(InputErrorKind::EmptyInput, "'" + index_name + "': no valid price rows");
    report.date_range = std::make_pair(kept.front().date, kept.back().date);
    return {PriceSeries(index_name, std::move(kept)), std::move(report)};
}

ParsedPrices load_price_csv(const std::string& path, const CsvSchema& schema, const std::string& index_name) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(InputErrorKind::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_price_csv(buf.str(), schema, index_name);
}

std::string write_price_csv(const PriceSeries& series) {
    std::string out = "Date,Close\n";
    char buf[64];
    for (const auto& o : series.observations()) {
        out += o.date.iso();
        out += ',';
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, o.value);
        out.append(buf, ptr);
        out += '\n';
    }
    return out;
}

}  // namespace effitest::ingest
