#include "effitest/render.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "effitest/errors.hpp"

namespace effitest {

using nlohmann::json;

std::string format_number(double x) {
    if (std::isnan(x)) return "NaN";
    if (std::isinf(x)) return x > 0 ? "Inf" : "-Inf";
    char buf[64];
    const double ax = std::fabs(x);
    if (ax >= 1e4 || (ax > 0.0 && ax < 1e-3)) {
        std::snprintf(buf, sizeof buf, "%.4e", x);
    } else {
        std::snprintf(buf, sizeof buf, "%.4f", x == 0.0 ? 0.0 : x);
    }
    return buf;
}

std::string format_p(double p, bool marked) {
    std::string s = p < 1e-4 ? "0.0001" : format_number(p);
    if (marked) s += '*';
    return s;
}

namespace {

constexpr const char* kMissing = "n/a";

std::string count(std::size_t n) { return std::to_string(n); }

std::string t_value(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", t);
    return buf;
}

std::string dmy(const std::optional<TradingDate>& d) {
    if (!d) return kMissing;
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d/%02d/%04d", d->day(), d->month(), d->year());
    return buf;
}

std::vector<std::string> period_header(const Report& report, const char* corner) {
    std::vector<std::string> h{corner};
    h.insert(h.end(), report.period_labels.begin(), report.period_labels.end());
    return h;
}

template <typename Fn>
std::vector<std::string> row(const std::string& name, const IndexReport& idx, Fn&& cell) {
    std::vector<std::string> r{name};
    for (const auto& p : idx.periods) r.push_back(cell(p));
    return r;
}

Table descriptive_table(const Report& report, const IndexReport& idx) {
    Table t;
    t.id = "descriptive_" + idx.index_name;
    t.title = "Descriptive statistics for the returns of " + idx.index_name;
    t.header = period_header(report, "");
    t.note = "* the Jarque-Bera test rejects normality at 5%";
    auto d = [](const PeriodResult& p, auto get) -> std::string {
        return p.descriptive ? get(*p.descriptive) : std::string(kMissing);
    };
    t.rows.push_back(row("Start", idx, [](const PeriodResult& p) { return dmy(p.first_date); }));
    t.rows.push_back(row("End", idx, [](const PeriodResult& p) { return dmy(p.last_date); }));
    t.rows.push_back(row("Observations", idx, [](const PeriodResult& p) { return count(p.n_returns); }));
    t.rows.push_back(row("Mean returns", idx, [&](const PeriodResult& p) {
        return d(p, [](const auto& s) { return format_number(s.mean); });
    }));
    t.rows.push_back(row("Max. returns", idx, [&](const PeriodResult& p) {
        return d(p, [](const auto& s) { return format_number(s.max); });
    }));
    t.rows.push_back(row("Min. returns", idx, [&](const PeriodResult& p) {
        return d(p, [](const auto& s) { return format_number(s.min); });
    }));
    t.rows.push_back(row("Std. deviation", idx, [&](const PeriodResult& p) {
        return d(p, [](const auto& s) { return format_number(s.std_dev); });
    }));
    t.rows.push_back(row("Skewness", idx, [&](const PeriodResult& p) {
        return d(p, [](const auto& s) { return format_number(s.skewness); });
    }));
    t.rows.push_back(row("Kurtosis", idx, [&](const PeriodResult& p) {
        return d(p, [](const auto& s) { return format_number(s.kurtosis); });
    }));
    t.rows.push_back(row("Jarque-Bera", idx, [](const PeriodResult& p) {
        return p.jarque_bera ? format_number(p.jarque_bera->statistic) : std::string(kMissing);
    }));
    t.rows.push_back(row("JB p-value", idx, [](const PeriodResult& p) {
        return p.jarque_bera ? format_p(p.jarque_bera->p_value, p.jarque_bera->reject_at_5pct)
                             : std::string(kMissing);
    }));
    return t;
}

Table runs_table(const Report& report, const IndexReport& idx) {
    Table t;
    t.id = "runs_" + idx.index_name;
    t.title = "Runs tests for the returns of " + idx.index_name + " relative to mean (zero)";
    t.header = period_header(report, "");
    t.note = "* |Z| <= 1.96: randomness NOT rejected at 5%; Z is signed";
    auto pair = [](const PeriodResult& p, auto get) -> std::string {
        const std::string a = p.runs_mean ? get(*p.runs_mean) : std::string(kMissing);
        const std::string b = p.runs_zero ? get(*p.runs_zero) : std::string(kMissing);
        return a + " (" + b + ")";
    };
    t.rows.push_back(row("N", idx, [&](const PeriodResult& p) {
        return pair(p, [](const auto& r) { return count(r.n); });
    }));
    t.rows.push_back(row("Nruns", idx, [&](const PeriodResult& p) {
        return pair(p, [](const auto& r) { return count(r.n_runs); });
    }));
    t.rows.push_back(row("n_1", idx, [&](const PeriodResult& p) {
        return pair(p, [](const auto& r) { return count(r.n_above); });
    }));
    t.rows.push_back(row("n_0", idx, [&](const PeriodResult& p) {
        return pair(p, [](const auto& r) { return count(r.n_below); });
    }));
    t.rows.push_back(row("n_2", idx, [&](const PeriodResult& p) {
        return pair(p, [](const auto& r) { return count(r.n_equal); });
    }));
    t.rows.push_back(row("Z", idx, [&](const PeriodResult& p) {
        return pair(p, [](const auto& r) { return format_number(r.z) + (r.reject_at_5pct() ? "" : "*"); });
    }));
    t.rows.push_back(row("p-value", idx, [&](const PeriodResult& p) {
        return pair(p, [](const auto& r) { return format_p(r.p_value, false); });
    }));
    return t;
}

Table adf_table(const Report& report, const IndexReport& idx) {
    Table t;
    t.id = "adf_" + idx.index_name;
    t.title = "ADF test for the " + unitroot::to_string(report.settings.adf_target) + " of " + idx.index_name +
              " (model: " + unitroot::to_string(report.settings.adf_model) + ")";
    t.header = period_header(report, "");
    t.note = "p-values interpolated from Dickey-Fuller quantiles and clamped to [0.01, 0.99]";
    auto a = [](const PeriodResult& p, auto get) -> std::string {
        return p.adf ? get(*p.adf) : std::string(kMissing);
    };
    t.rows.push_back(row("ADF Test Statistic", idx, [&](const PeriodResult& p) {
        return a(p, [](const auto& r) { return format_number(r.tau); });
    }));
    t.rows.push_back(row("p-value", idx, [&](const PeriodResult& p) {
        return a(p, [](const auto& r) { return format_number(r.p_value); });
    }));
    t.rows.push_back(row("Number of Lags", idx, [&](const PeriodResult& p) {
        return a(p, [](const auto& r) { return count(r.lags); });
    }));
    t.rows.push_back(row("Number of Observations", idx, [&](const PeriodResult& p) {
        return a(p, [](const auto& r) { return count(r.n_obs); });
    }));
    return t;
}

Table acf_table(const Report& report, const IndexReport& idx) {
    Table t;
    t.id = "acf_" + idx.index_name;
    const bool appendix = report.settings.acf_mode == randomness::AcfMode::Appendix;
    t.title = "Serial correlation coefficients for returns of " + idx.index_name + " (t-values, se " +
              (appendix ? "1/sqrt(n)" : "sd(rho)/sqrt(K)") + ")";
    t.header = period_header(report, "Lag");
    t.note = "* Ljung-Box rejects no autocorrelation up to lag " + std::to_string(report.settings.lb_horizon) +
             " at 5%";
    for (std::size_t k = 1; k <= report.settings.max_lag; ++k) {
        t.rows.push_back(row(count(k), idx, [&](const PeriodResult& p) -> std::string {
            if (!p.acf || p.acf->rho.size() < k) return kMissing;
            return format_number(p.acf->rho[k - 1]) + " (" + t_value(p.acf->t_values[k - 1]) + ")";
        }));
    }
    auto a = [](const PeriodResult& p, auto get) -> std::string {
        return p.acf ? get(*p.acf) : std::string(kMissing);
    };
    t.rows.push_back(row("Standard Deviation", idx, [&](const PeriodResult& p) {
        return a(p, [](const auto& r) { return format_number(r.rho_std_dev); });
    }));
    t.rows.push_back(row("Standard Error", idx, [&](const PeriodResult& p) {
        return a(p, [](const auto& r) { return format_number(r.se()); });
    }));
    t.rows.push_back(row("Ljung Box Q-Stat", idx, [&](const PeriodResult& p) {
        return a(p, [](const auto& r) { return format_number(r.ljung_box_q) + (r.q_p_value < 0.05 ? "*" : ""); });
    }));
    t.rows.push_back(row("p-value", idx, [&](const PeriodResult& p) {
        return a(p, [](const auto& r) { return format_p(r.q_p_value, false); });
    }));
    return t;
}

Table hp_table(const Report& report, const IndexReport& idx) {
    Table t;
    t.id = "hp_" + idx.index_name;
    t.title = "Hodrick-Prescott smoothing of the returns of " + idx.index_name;
    t.header = period_header(report, "");
    auto h = [](const PeriodResult& p, auto get) -> std::string { return p.hp ? get(*p.hp) : std::string(kMissing); };
    t.rows.push_back(row("Lambda", idx, [&](const PeriodResult& p) {
        return h(p, [](const auto& s) { return format_number(s.lambda); });
    }));
    t.rows.push_back(row("Observations", idx, [&](const PeriodResult& p) {
        return h(p, [](const auto& s) { return count(s.n); });
    }));
    t.rows.push_back(row("Trend std. deviation", idx, [&](const PeriodResult& p) {
        return h(p, [](const auto& s) { return format_number(s.trend_std_dev); });
    }));
    t.rows.push_back(row("Cycle std. deviation", idx, [&](const PeriodResult& p) {
        return h(p, [](const auto& s) { return format_number(s.cycle_std_dev); });
    }));
    t.rows.push_back(row("Trend min.", idx, [&](const PeriodResult& p) {
        return h(p, [](const auto& s) { return format_number(s.trend_min); });
    }));
    t.rows.push_back(row("Trend max.", idx, [&](const PeriodResult& p) {
        return h(p, [](const auto& s) { return format_number(s.trend_max); });
    }));
    t.rows.push_back(row("Objective", idx, [&](const PeriodResult& p) {
        return h(p, [](const auto& s) { return format_number(s.objective_value); });
    }));
    return t;
}

Table correlation_table(const Report& report, const CrossMarketReport& cm) {
    Table t;
    t.id = "correlation";
    t.title = "Correlations between the market prices and returns (" + cm.index_a + " / " + cm.index_b + ")";
    t.header = period_header(report, "");
    t.note = "aligned on the union calendar; " + std::to_string(cm.fill_count_a) + " forward-filled closes for " +
             cm.index_a + ", " + std::to_string(cm.fill_count_b) + " for " + cm.index_b;
    std::vector<std::string> r{"Returns"}, p{"Prices"}, n{"Observations"};
    for (const auto& c : cm.periods) {
        r.push_back(c.returns ? format_number(*c.returns) : kMissing);
        p.push_back(c.prices ? format_number(*c.prices) : kMissing);
        n.push_back(count(c.n_prices));
    }
    t.rows = {r, p, n};
    return t;
}

Table mc_table(const Report& report) {
    Table t;
    t.id = "mc_validation";
    t.title = "Monte-Carlo size and power checks (alpha = 0.05)";
    t.header = {"Check", "Test", "Trials", "Rejection rate", "95% CI half-width", "Band", "Result"};
    for (const auto& m : report.mc_validation) {
        t.rows.push_back({m.label, m.test_name, count(m.trials), format_number(m.rejection_rate),
                          format_number(m.ci_halfwidth), "[" + format_number(m.lower) + ", " + format_number(m.upper) + "]",
                          m.pass ? "pass" : "FAIL"});
    }
    return t;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string render_csv(const Table& t) {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_cell(cells[i]);
        }
        out += '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out;
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string render_markdown(const Report& report, const std::vector<Table>& tables) {
    std::string out = "# Weak-form efficiency report\n\n";
    out += "Periods: " + report.settings.scheme + "\n\n";
    for (std::size_t i = 0; i < tables.size(); ++i) {
        const auto& t = tables[i];
        out += "## Table " + std::to_string(i + 1) + ": " + t.title + "\n\n|";
        for (const auto& h : t.header) out += " " + md_cell(h) + " |";
        out += "\n|";
        for (std::size_t c = 0; c < t.header.size(); ++c) out += c == 0 ? " --- |" : " ---: |";
        out += '\n';
        for (const auto& r : t.rows) {
            out += '|';
            for (const auto& cell : r) out += " " + md_cell(cell) + " |";
            out += '\n';
        }
        if (!t.note.empty()) out += "\n" + t.note + "\n";
        out += '\n';
    }
    out += "## Legend\n\n";
    out += "- Descriptive tables: `*` on the JB p-value means normality is rejected at 5%.\n";
    out += "- Runs tables: cells read `mean (zero)` reference; `*` on Z means randomness is NOT rejected (|Z| <= 1.96).\n";
    out += "- ACF tables: cells read `rho (t)`; `*` on the Q-statistic means Ljung-Box rejects at 5%.\n";
    out += "- p-values below 1e-4 are displayed as 0.0001.\n";
    out += "\n## Warnings\n\n";
    if (report.warnings.empty()) out += "None.\n";
    for (const auto& w : report.warnings) out += "- " + w + "\n";
    return out;
}

// ---- JSON ----------------------------------------------------------------

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
double get_num(const json& j) { return j.is_null() ? std::nan("") : j.get<double>(); }

template <typename T, typename Fn>
json opt(const std::optional<T>& v, Fn&& fn) {
    return v ? fn(*v) : json(nullptr);
}

json date_json(const std::optional<TradingDate>& d) { return d ? json(d->iso()) : json(nullptr); }
std::optional<TradingDate> date_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    auto d = TradingDate::parse_iso(j.get<std::string>());
    if (!d) throw InputError(InputErrorKind::InvalidInput, "report JSON: bad date");
    return d;
}

json test_json(const TestResult& t) {
    json aux = json::object();
    for (const auto& [k, v] : t.auxiliary) aux[k] = num(v);
    return {{"test_name", t.test_name}, {"statistic", num(t.statistic)}, {"p_value", num(t.p_value)},
            {"reject_at_5pct", t.reject_at_5pct}, {"mode_notes", t.mode_notes}, {"auxiliary", aux}};
}
TestResult test_from(const json& j) {
    TestResult t;
    t.test_name = j.at("test_name");
    t.statistic = get_num(j.at("statistic"));
    t.p_value = get_num(j.at("p_value"));
    t.reject_at_5pct = j.at("reject_at_5pct");
    t.mode_notes = j.at("mode_notes");
    for (const auto& [k, v] : j.at("auxiliary").items()) t.auxiliary[k] = get_num(v);
    return t;
}

json runs_json(const randomness::RunsResult& r) {
    return {{"n", r.n},         {"n_runs", r.n_runs}, {"n_above", r.n_above}, {"n_below", r.n_below},
            {"n_equal", r.n_equal}, {"z", num(r.z)},     {"p_value", num(r.p_value)},
            {"reference", r.reference == randomness::RunsReference::Mean ? "mean" : "zero"}};
}
randomness::RunsResult runs_from(const json& j) {
    randomness::RunsResult r;
    r.n = j.at("n");
    r.n_runs = j.at("n_runs");
    r.n_above = j.at("n_above");
    r.n_below = j.at("n_below");
    r.n_equal = j.at("n_equal");
    r.z = get_num(j.at("z"));
    r.p_value = get_num(j.at("p_value"));
    r.reference = j.at("reference") == "mean" ? randomness::RunsReference::Mean : randomness::RunsReference::Zero;
    return r;
}

json vec_json(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}
std::vector<double> vec_from(const json& j) {
    std::vector<double> v;
    for (const auto& x : j) v.push_back(get_num(x));
    return v;
}

const char* acf_mode_name(randomness::AcfMode m) {
    return m == randomness::AcfMode::Appendix ? "appendix" : "paper_table";
}
randomness::AcfMode acf_mode_from(const json& j) {
    return j == "appendix" ? randomness::AcfMode::Appendix : randomness::AcfMode::PaperTable;
}

json acf_json(const randomness::AcfResult& a) {
    return {{"n", a.n},
            {"max_lag", a.max_lag},
            {"rho", vec_json(a.rho)},
            {"se_appendix", num(a.se_appendix)},
            {"se_paper_table", num(a.se_paper_table)},
            {"rho_std_dev", num(a.rho_std_dev)},
            {"t_values", vec_json(a.t_values)},
            {"mode", acf_mode_name(a.mode)},
            {"lb_horizon", a.lb_horizon},
            {"ljung_box_q", num(a.ljung_box_q)},
            {"q_p_value", num(a.q_p_value)}};
}
randomness::AcfResult acf_from(const json& j) {
    randomness::AcfResult a;
    a.n = j.at("n");
    a.max_lag = j.at("max_lag");
    a.rho = vec_from(j.at("rho"));
    a.se_appendix = get_num(j.at("se_appendix"));
    a.se_paper_table = get_num(j.at("se_paper_table"));
    a.rho_std_dev = get_num(j.at("rho_std_dev"));
    a.t_values = vec_from(j.at("t_values"));
    a.mode = acf_mode_from(j.at("mode"));
    a.lb_horizon = j.at("lb_horizon");
    a.ljung_box_q = get_num(j.at("ljung_box_q"));
    a.q_p_value = get_num(j.at("q_p_value"));
    return a;
}

json adf_json(const unitroot::AdfResult& a) {
    return {{"tau", num(a.tau)},     {"lags", a.lags},     {"model", unitroot::to_string(a.model)},
            {"p_value", num(a.p_value)}, {"n_obs", a.n_obs}, {"target", unitroot::to_string(a.target)}};
}
unitroot::AdfModel model_from(const json& j) {
    const auto m = unitroot::parse_adf_model(j.get<std::string>());
    if (!m) throw InputError(InputErrorKind::InvalidInput, "report JSON: bad ADF model");
    return *m;
}
unitroot::AdfTarget target_from(const json& j) {
    const auto t = unitroot::parse_adf_target(j.get<std::string>());
    if (!t) throw InputError(InputErrorKind::InvalidInput, "report JSON: bad ADF target");
    return *t;
}
unitroot::AdfResult adf_from(const json& j) {
    unitroot::AdfResult a;
    a.tau = get_num(j.at("tau"));
    a.lags = j.at("lags");
    a.model = model_from(j.at("model"));
    a.p_value = get_num(j.at("p_value"));
    a.n_obs = j.at("n_obs");
    a.target = target_from(j.at("target"));
    return a;
}

json desc_json(const stats::DescriptiveStats& s) {
    return {{"n", s.n},           {"mean", num(s.mean)},         {"max", num(s.max)},          {"min", num(s.min)},
            {"std_dev", num(s.std_dev)}, {"skewness", num(s.skewness)}, {"kurtosis", num(s.kurtosis)}};
}
stats::DescriptiveStats desc_from(const json& j) {
    stats::DescriptiveStats s;
    s.n = j.at("n");
    s.mean = get_num(j.at("mean"));
    s.max = get_num(j.at("max"));
    s.min = get_num(j.at("min"));
    s.std_dev = get_num(j.at("std_dev"));
    s.skewness = get_num(j.at("skewness"));
    s.kurtosis = get_num(j.at("kurtosis"));
    return s;
}

json hp_json(const HpSummary& h) {
    return {{"lambda", num(h.lambda)},         {"n", h.n},
            {"trend_std_dev", num(h.trend_std_dev)}, {"cycle_std_dev", num(h.cycle_std_dev)},
            {"trend_min", num(h.trend_min)},   {"trend_max", num(h.trend_max)},
            {"objective_value", num(h.objective_value)}};
}
HpSummary hp_from(const json& j) {
    HpSummary h;
    h.lambda = get_num(j.at("lambda"));
    h.n = j.at("n");
    h.trend_std_dev = get_num(j.at("trend_std_dev"));
    h.cycle_std_dev = get_num(j.at("cycle_std_dev"));
    h.trend_min = get_num(j.at("trend_min"));
    h.trend_max = get_num(j.at("trend_max"));
    h.objective_value = get_num(j.at("objective_value"));
    return h;
}

template <typename T, typename Fn>
std::optional<T> opt_from(const json& j, Fn&& fn) {
    if (j.is_null()) return std::nullopt;
    return fn(j);
}

json period_json(const PeriodResult& p) {
    return {{"label", p.label},
            {"first_date", date_json(p.first_date)},
            {"last_date", date_json(p.last_date)},
            {"n_returns", p.n_returns},
            {"descriptive", opt(p.descriptive, desc_json)},
            {"jarque_bera", opt(p.jarque_bera, test_json)},
            {"runs_mean", opt(p.runs_mean, runs_json)},
            {"runs_zero", opt(p.runs_zero, runs_json)},
            {"acf", opt(p.acf, acf_json)},
            {"adf", opt(p.adf, adf_json)},
            {"hp", opt(p.hp, hp_json)}};
}
PeriodResult period_from(const json& j) {
    PeriodResult p;
    p.label = j.at("label");
    p.first_date = date_from(j.at("first_date"));
    p.last_date = date_from(j.at("last_date"));
    p.n_returns = j.at("n_returns");
    p.descriptive = opt_from<stats::DescriptiveStats>(j.at("descriptive"), desc_from);
    p.jarque_bera = opt_from<TestResult>(j.at("jarque_bera"), test_from);
    p.runs_mean = opt_from<randomness::RunsResult>(j.at("runs_mean"), runs_from);
    p.runs_zero = opt_from<randomness::RunsResult>(j.at("runs_zero"), runs_from);
    p.acf = opt_from<randomness::AcfResult>(j.at("acf"), acf_from);
    p.adf = opt_from<unitroot::AdfResult>(j.at("adf"), adf_from);
    p.hp = opt_from<HpSummary>(j.at("hp"), hp_from);
    return p;
}

json opt_num(const std::optional<double>& v) { return v ? num(*v) : json(nullptr); }
std::optional<double> opt_num_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

}  // namespace

std::vector<Table> build_tables(const Report& report) {
    std::vector<Table> tables;
    for (const auto& idx : report.indices) tables.push_back(descriptive_table(report, idx));
    for (const auto& idx : report.indices) tables.push_back(runs_table(report, idx));
    for (const auto& idx : report.indices) tables.push_back(adf_table(report, idx));
    for (const auto& idx : report.indices) tables.push_back(acf_table(report, idx));
    if (report.cross_market) tables.push_back(correlation_table(report, *report.cross_market));
    for (const auto& idx : report.indices) tables.push_back(hp_table(report, idx));
    if (!report.mc_validation.empty()) tables.push_back(mc_table(report));
    return tables;
}

std::string report_to_json(const Report& report) {
    const auto& s = report.settings;
    json j;
    j["settings"] = {{"scheme", s.scheme},
                     {"acf_mode", acf_mode_name(s.acf_mode)},
                     {"adf_model", unitroot::to_string(s.adf_model)},
                     {"adf_target", unitroot::to_string(s.adf_target)},
                     {"hp_lambda", num(s.hp_lambda)},
                     {"max_lag", s.max_lag},
                     {"lb_horizon", s.lb_horizon}};
    j["period_labels"] = report.period_labels;
    j["indices"] = json::array();
    for (const auto& idx : report.indices) {
        json periods = json::array();
        for (const auto& p : idx.periods) periods.push_back(period_json(p));
        j["indices"].push_back({{"index_name", idx.index_name},
                                {"rows_read", idx.rows_read},
                                {"rows_dropped", idx.rows_dropped},
                                {"n_prices", idx.n_prices},
                                {"periods", periods}});
    }
    if (report.cross_market) {
        const auto& cm = *report.cross_market;
        json periods = json::array();
        for (const auto& c : cm.periods) {
            periods.push_back({{"label", c.label},
                               {"n_prices", c.n_prices},
                               {"prices", opt_num(c.prices)},
                               {"returns", opt_num(c.returns)}});
        }
        j["cross_market"] = {{"index_a", cm.index_a},           {"index_b", cm.index_b},
                             {"aligned_dates", cm.aligned_dates}, {"fill_count_a", cm.fill_count_a},
                             {"fill_count_b", cm.fill_count_b},   {"periods", periods}};
    } else {
        j["cross_market"] = nullptr;
    }
    j["mc_validation"] = json::array();
    for (const auto& m : report.mc_validation) {
        j["mc_validation"].push_back({{"label", m.label},
                                      {"test_name", m.test_name},
                                      {"trials", m.trials},
                                      {"rejection_rate", num(m.rejection_rate)},
                                      {"ci_halfwidth", num(m.ci_halfwidth)},
                                      {"lower", num(m.lower)},
                                      {"upper", num(m.upper)},
                                      {"pass", m.pass}});
    }
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        Report r;
        const auto& s = j.at("settings");
        r.settings.scheme = s.at("scheme");
        r.settings.acf_mode = acf_mode_from(s.at("acf_mode"));
        r.settings.adf_model = model_from(s.at("adf_model"));
        r.settings.adf_target = target_from(s.at("adf_target"));
        r.settings.hp_lambda = get_num(s.at("hp_lambda"));
        r.settings.max_lag = s.at("max_lag");
        r.settings.lb_horizon = s.at("lb_horizon");
        r.period_labels = j.at("period_labels").get<std::vector<std::string>>();
        for (const auto& ji : j.at("indices")) {
            IndexReport idx;
            idx.index_name = ji.at("index_name");
            idx.rows_read = ji.at("rows_read");
            idx.rows_dropped = ji.at("rows_dropped");
            idx.n_prices = ji.at("n_prices");
            for (const auto& jp : ji.at("periods")) idx.periods.push_back(period_from(jp));
            r.indices.push_back(std::move(idx));
        }
        if (!j.at("cross_market").is_null()) {
            const auto& jc = j.at("cross_market");
            CrossMarketReport cm;
            cm.index_a = jc.at("index_a");
            cm.index_b = jc.at("index_b");
            cm.aligned_dates = jc.at("aligned_dates");
            cm.fill_count_a = jc.at("fill_count_a");
            cm.fill_count_b = jc.at("fill_count_b");
            for (const auto& jp : jc.at("periods")) {
                cm.periods.push_back({jp.at("label"), jp.at("n_prices"), opt_num_from(jp.at("prices")),
                                      opt_num_from(jp.at("returns"))});
            }
            r.cross_market = std::move(cm);
        }
        for (const auto& jm : j.at("mc_validation")) {
            r.mc_validation.push_back({jm.at("label"), jm.at("test_name"), jm.at("trials"),
                                       get_num(jm.at("rejection_rate")), get_num(jm.at("ci_halfwidth")),
                                       get_num(jm.at("lower")), get_num(jm.at("upper")), jm.at("pass")});
        }
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw InputError(InputErrorKind::InvalidInput, std::string("report JSON: ") + e.what());
    }
}

std::vector<RenderedFile> render(const Report& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Markdown: return {{"report.md", render_markdown(report, build_tables(report))}};
        case OutputFormat::Csv: {
            std::vector<RenderedFile> out;
            for (const auto& t : build_tables(report)) out.push_back({"tables/" + t.id + ".csv", render_csv(t)});
            return out;
        }
        case OutputFormat::Json: return {{"report.json", report_to_json(report)}};
    }
    return {};
}

}  // namespace effitest
