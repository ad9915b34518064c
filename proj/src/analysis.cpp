#include "effitest/report.hpp"

#include <algorithm>
#include <cmath>

#include "effitest/cross_market.hpp"
#include "effitest/errors.hpp"
#include "effitest/hp_filter.hpp"

namespace effitest {

namespace {

double std_dev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Runs `fn`; on a library error records one warning naming the computation.
template <typename Fn>
void guarded(std::vector<std::string>& warnings, const std::string& where, const char* what, Fn&& fn) {
    try {
        fn();
    } catch (const StatError& e) {
        warnings.push_back(where + ": " + what + " skipped: " + e.what());
    } catch (const InputError& e) {
        warnings.push_back(where + ": " + what + " skipped: " + e.what());
    }
}

}  // namespace

PeriodResult analyze_period(const std::string& index_name, const Period& period, const ReturnSeries& returns,
                            const PriceSeries& prices, const AnalysisConfig& config,
                            std::vector<std::string>& warnings) {
    PeriodResult r;
    r.label = period.label;
    r.n_returns = returns.size();
    if (!returns.empty()) {
        r.first_date = returns[0].date;
        r.last_date = returns[returns.size() - 1].date;
    }
    const std::string where = "index '" + index_name + "', period '" + period.label + "'";
    const auto values = returns.values();

    guarded(warnings, where, "descriptive statistics", [&] {
        r.descriptive = stats::describe(values);
        r.jarque_bera = stats::jarque_bera(*r.descriptive);
    });
    guarded(warnings, where, "runs test (mean)",
            [&] { r.runs_mean = randomness::runs_test(values, randomness::RunsReference::Mean); });
    guarded(warnings, where, "runs test (zero)",
            [&] { r.runs_zero = randomness::runs_test(values, randomness::RunsReference::Zero); });
    guarded(warnings, where, "autocorrelation",
            [&] { r.acf = randomness::acf(values, config.max_lag, config.acf_mode, config.lb_horizon); });
    guarded(warnings, where, "ADF test", [&] {
        if (config.adf_target == unitroot::AdfTarget::Returns) {
            r.adf = unitroot::adf_test(values, unitroot::default_lag(values.size()), config.adf_model,
                                       unitroot::AdfTarget::Returns);
        } else {
            std::vector<double> logp;
            logp.reserve(prices.size());
            for (const auto& o : prices.observations()) logp.push_back(std::log(o.value));
            r.adf = unitroot::adf_test(logp, unitroot::default_lag(logp.size()), config.adf_model,
                                       unitroot::AdfTarget::LogPrices);
        }
    });
    guarded(warnings, where, "HP filter", [&] {
        const auto d = hp::hp_filter(values, config.hp_lambda);
        HpSummary s;
        s.lambda = d.lambda;
        s.n = d.trend.size();
        s.trend_std_dev = std_dev(d.trend);
        s.cycle_std_dev = std_dev(d.cycle);
        s.trend_min = *std::min_element(d.trend.begin(), d.trend.end());
        s.trend_max = *std::max_element(d.trend.begin(), d.trend.end());
        s.objective_value = d.objective_value;
        r.hp = s;
    });
    return r;
}

AnalysisOutput analyze_series(const AnalysisConfig& config, std::vector<LoadedInput> inputs) {
    AnalysisOutput out;
    Report& report = out.report;
    report.settings = {config.scheme.to_string(), config.acf_mode,  config.adf_model, config.adf_target,
                       config.hp_lambda,          config.max_lag,   config.lb_horizon};
    for (const auto& p : config.scheme.periods()) report.period_labels.push_back(p.label);

    const auto& periods = config.scheme.periods();
    for (const auto& in : inputs) {
        IndexReport idx;
        idx.index_name = in.prices.name();
        idx.rows_read = in.ingest.rows_read;
        idx.rows_dropped = in.ingest.rows_dropped;
        idx.n_prices = in.prices.size();

        // An empty period already surfaces as one warning per skipped computation.
        const auto seg_r = segment(in.returns, config.scheme);
        const auto seg_p = segment(in.prices, config.scheme);

        // Periods are independent; each writes only its own slot.
        std::vector<PeriodResult> results(periods.size());
        std::vector<std::vector<std::string>> period_warnings(periods.size());
        const auto count = static_cast<std::ptrdiff_t>(periods.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            results[i] = analyze_period(idx.index_name, periods[i], seg_r.parts[i].second, seg_p.parts[i].second,
                                        config, period_warnings[i]);
        }
        for (auto& w : period_warnings) report.warnings.insert(report.warnings.end(), w.begin(), w.end());
        idx.periods = std::move(results);
        report.indices.push_back(std::move(idx));
    }

    if (inputs.size() == 2) {
        const std::string where = "cross-market '" + inputs[0].prices.name() + "' / '" + inputs[1].prices.name() + "'";
        try {
            const auto aligned = cross::align(inputs[0].prices, inputs[1].prices);
            CrossMarketReport cm;
            cm.index_a = inputs[0].prices.name();
            cm.index_b = inputs[1].prices.name();
            cm.aligned_dates = aligned.size();
            cm.fill_count_a = aligned.fill_count_a;
            cm.fill_count_b = aligned.fill_count_b;
            const auto pa = aligned.series_a(cm.index_a);
            const auto pb = aligned.series_b(cm.index_b);
            const auto sa = segment(pa, config.scheme);
            const auto sb = segment(pb, config.scheme);
            const auto ra = segment(compute_returns(pa), config.scheme);
            const auto rb = segment(compute_returns(pb), config.scheme);
            for (std::size_t i = 0; i < periods.size(); ++i) {
                CorrelationResult c;
                c.label = periods[i].label;
                c.n_prices = sa.parts[i].second.size();
                const std::string pw = where + ", period '" + c.label + "'";
                guarded(report.warnings, pw, "price correlation",
                        [&] { c.prices = cross::pearson(sa.parts[i].second.values(), sb.parts[i].second.values()); });
                guarded(report.warnings, pw, "return correlation",
                        [&] { c.returns = cross::pearson(ra.parts[i].second.values(), rb.parts[i].second.values()); });
                cm.periods.push_back(std::move(c));
            }
            report.cross_market = std::move(cm);
        } catch (const StatError& e) {
            report.warnings.push_back(where + ": alignment skipped: " + e.what());
        }
    }

    if (config.mc_validate) {
        for (const auto& e : sim::validation_battery(config.seed)) {
            report.mc_validation.push_back({e.label, e.result.test_name, e.result.trials, e.result.rejection_rate,
                                            e.result.ci_halfwidth, e.lower, e.upper, e.pass()});
        }
    }

    out.inputs = std::move(inputs);
    return out;
}

AnalysisOutput run_analysis(const AnalysisConfig& config) {
    config.validate();
    std::vector<LoadedInput> inputs;
    for (const auto& spec : config.inputs) {
        auto parsed = ingest::load_price_csv(spec.path, spec.schema, spec.index_name);
        LoadedInput in;
        in.returns = compute_returns(parsed.series);
        in.prices = std::move(parsed.series);
        in.ingest = std::move(parsed.report);
        inputs.push_back(std::move(in));
    }
    return analyze_series(config, std::move(inputs));
}

}  // namespace effitest
