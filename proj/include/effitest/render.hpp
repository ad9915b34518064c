#pragma once

#include <string>
#include <vector>

#include "effitest/config.hpp"
#include "effitest/report.hpp"

namespace effitest {

/// One printed table: a header row and body rows of preformatted cells.
struct Table {
    std::string id;     ///< file-name slug, e.g. "descriptive_SSE"
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string note;  ///< marker convention for this table
};

/// Fixed display rules: 4 decimals, scientific when |x| >= 1e4 or 0 < |x| < 1e-3.
std::string format_number(double x);
/// p-value display, floored at 1e-4, with an optional significance marker.
std::string format_p(double p, bool marked);

/// Tables in print order: descriptive, runs, ADF, ACF (each per index), HP
/// smoothing summary, cross-market correlations, Monte-Carlo validation.
std::vector<Table> build_tables(const Report& report);

struct RenderedFile {
    std::string filename;  ///< relative to the output directory
    std::string content;
};

/// markdown: report.md; csv: tables/<id>.csv per table; json: report.json.
std::vector<RenderedFile> render(const Report& report, OutputFormat format);

std::string report_to_json(const Report& report);
/// Throws InputError(InvalidInput) on malformed documents.
Report report_from_json(const std::string& text);

}  // namespace effitest
