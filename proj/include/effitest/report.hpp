#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effitest/config.hpp"
#include "effitest/descriptive.hpp"
#include "effitest/ingest.hpp"
#include "effitest/randomness.hpp"
#include "effitest/series.hpp"
#include "effitest/simulation.hpp"
#include "effitest/unitroot.hpp"

namespace effitest {

struct HpSummary {
    double lambda = 0.0;
    std::size_t n = 0;
    double trend_std_dev = 0.0;
    double cycle_std_dev = 0.0;
    double trend_min = 0.0;
    double trend_max = 0.0;
    double objective_value = 0.0;

    friend bool operator==(const HpSummary&, const HpSummary&) = default;
};

/// Every test for one index over one period. A computation that failed leaves
/// its slot empty and adds exactly one warning to the report.
struct PeriodResult {
    std::string label;
    std::optional<TradingDate> first_date;
    std::optional<TradingDate> last_date;
    std::size_t n_returns = 0;
    std::optional<stats::DescriptiveStats> descriptive;
    std::optional<TestResult> jarque_bera;
    std::optional<randomness::RunsResult> runs_mean;
    std::optional<randomness::RunsResult> runs_zero;
    std::optional<randomness::AcfResult> acf;
    std::optional<unitroot::AdfResult> adf;
    std::optional<HpSummary> hp;

    friend bool operator==(const PeriodResult&, const PeriodResult&) = default;
};

struct IndexReport {
    std::string index_name;
    std::size_t rows_read = 0;
    std::size_t rows_dropped = 0;
    std::size_t n_prices = 0;
    std::vector<PeriodResult> periods;

    friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

struct CorrelationResult {
    std::string label;
    std::size_t n_prices = 0;
    std::optional<double> prices;
    std::optional<double> returns;

    friend bool operator==(const CorrelationResult&, const CorrelationResult&) = default;
};

struct CrossMarketReport {
    std::string index_a;
    std::string index_b;
    std::size_t aligned_dates = 0;
    std::size_t fill_count_a = 0;
    std::size_t fill_count_b = 0;
    std::vector<CorrelationResult> periods;

    friend bool operator==(const CrossMarketReport&, const CrossMarketReport&) = default;
};

struct McCheck {
    std::string label;
    std::string test_name;
    std::size_t trials = 0;
    double rejection_rate = 0.0;
    double ci_halfwidth = 0.0;
    double lower = 0.0;
    double upper = 1.0;
    bool pass = false;

    friend bool operator==(const McCheck&, const McCheck&) = default;
};

struct ReportSettings {
    std::string scheme;
    randomness::AcfMode acf_mode = randomness::AcfMode::PaperTable;
    unitroot::AdfModel adf_model = unitroot::AdfModel::DriftTrend;
    unitroot::AdfTarget adf_target = unitroot::AdfTarget::Returns;
    double hp_lambda = 0.0;
    std::size_t max_lag = 20;
    std::size_t lb_horizon = 20;

    friend bool operator==(const ReportSettings&, const ReportSettings&) = default;
};

struct Report {
    ReportSettings settings;
    std::vector<std::string> period_labels;
    std::vector<IndexReport> indices;
    std::optional<CrossMarketReport> cross_market;
    std::vector<McCheck> mc_validation;
    std::vector<std::string> warnings;

    friend bool operator==(const Report&, const Report&) = default;
};

/// Parsed inputs kept next to the report for plotting.
struct LoadedInput {
    PriceSeries prices;
    ReturnSeries returns;
    ingest::IngestReport ingest;
};

struct AnalysisOutput {
    Report report;
    std::vector<LoadedInput> inputs;
};

/// Loads every input (InputError propagates) and runs the full battery per
/// period. Period-level failures become warnings.
AnalysisOutput run_analysis(const AnalysisConfig& config);

/// Same, on already-parsed price series.
AnalysisOutput analyze_series(const AnalysisConfig& config, std::vector<LoadedInput> inputs);

PeriodResult analyze_period(const std::string& index_name, const Period& period, const ReturnSeries& returns,
                            const PriceSeries& prices, const AnalysisConfig& config,
                            std::vector<std::string>& warnings);

}  // namespace effitest
