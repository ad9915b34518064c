#include "effitest/randomness.hpp"

#include <cmath>
#include <numeric>

#include "effitest/distributions.hpp"
#include "effitest/errors.hpp"

namespace effitest::randomness {

TestResult RunsResult::as_test_result() const {
    TestResult r;
    r.test_name = reference == RunsReference::Mean ? "runs_mean" : "runs_zero";
    r.statistic = z;
    r.p_value = p_value;
    r.reject_at_5pct = reject_at_5pct();
    r.mode_notes = "signed Z; printed tables show |Z| and mark non-rejection with '*'";
    r.auxiliary = {{"n", static_cast<double>(n)},
                   {"n_runs", static_cast<double>(n_runs)},
                   {"n_above", static_cast<double>(n_above)},
                   {"n_below", static_cast<double>(n_below)},
                   {"n_equal", static_cast<double>(n_equal)}};
    return r;
}

RunsResult runs_from_counts(std::size_t n_above, std::size_t n_below, std::size_t n_runs) {
    if (n_above == 0 || n_below == 0) {
        throw StatError(StatErrorKind::DegenerateClassification,
                        "runs test: all values lie on one side of the reference");
    }
    RunsResult r;
    r.n_above = n_above;
    r.n_below = n_below;
    r.n_runs = n_runs;
    r.n = n_above + n_below;
    const double na = static_cast<double>(n_above);
    const double nb = static_cast<double>(n_below);
    const double n = na + nb;
    const double two_ab = 2.0 * na * nb;
    const double mu = two_ab / n + 1.0;
    const double var = two_ab * (two_ab - n) / (n * n * (n - 1.0));
    if (!(var > 0.0)) {
        throw StatError(StatErrorKind::DegenerateClassification, "runs test: zero variance of the run count");
    }
    r.z = (static_cast<double>(n_runs) - mu) / std::sqrt(var);
    r.p_value = stats::two_sided_normal_p(r.z);
    return r;
}

RunsResult runs_test(std::span<const double> values, RunsReference reference) {
    double ref = 0.0;
    if (reference == RunsReference::Mean) {
        if (values.empty()) throw StatError(StatErrorKind::InsufficientData, "runs test: empty series");
        ref = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    }
    std::size_t above = 0, below = 0, equal = 0, runs = 0;
    int last_sign = 0;
    for (double v : values) {
        int sign = 0;
        if (v > ref) {
            sign = 1;
            ++above;
        } else if (v < ref) {
            sign = -1;
            ++below;
        } else {
            ++equal;
            continue;
        }
        if (sign != last_sign) ++runs;
        last_sign = sign;
    }
    RunsResult r = runs_from_counts(above, below, runs);
    r.n_equal = equal;
    r.n = values.size();
    r.reference = reference;
    return r;
}

RunsResult runs_test(const ReturnSeries& returns, RunsReference reference) {
    const auto v = returns.values();
    return runs_test(std::span<const double>(v), reference);
}

std::size_t AcfResult::significant_lags() const {
    std::size_t count = 0;
    for (double t : t_values) count += (t > 1.96 || t < -1.96) ? 1 : 0;
    return count;
}

namespace {

struct Centered {
    std::vector<double> dev;
    double denom = 0.0;
};

Centered center(std::span<const double> values, std::size_t max_lag) {
    const std::size_t n = values.size();
    if (max_lag < 1 || n <= max_lag) {
        throw StatError(StatErrorKind::InsufficientData, "acf: need n > max_lag >= 1 (n = " + std::to_string(n) +
                                                             ", max_lag = " + std::to_string(max_lag) + ")");
    }
    Centered c;
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    c.dev.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        c.dev[t] = values[t] - mean;
        c.denom += c.dev[t] * c.dev[t];
    }
    if (!(c.denom > 0.0)) throw StatError(StatErrorKind::ZeroVariance, "acf: zero variance");
    return c;
}

double lag_product(const std::vector<double>& dev, std::size_t k) {
    double s = 0.0;
    for (std::size_t t = k; t < dev.size(); ++t) s += dev[t] * dev[t - k];
    return s;
}

}  // namespace

std::vector<double> autocorrelations_serial(std::span<const double> values, std::size_t max_lag) {
    const Centered c = center(values, max_lag);
    std::vector<double> rho(max_lag);
    for (std::size_t k = 1; k <= max_lag; ++k) rho[k - 1] = lag_product(c.dev, k) / c.denom;
    return rho;
}

std::vector<double> autocorrelations(std::span<const double> values, std::size_t max_lag) {
    const Centered c = center(values, max_lag);
    std::vector<double> rho(max_lag);
    const auto lags = static_cast<std::ptrdiff_t>(max_lag);
#pragma omp parallel for schedule(static) if (values.size() * max_lag > 200000)
    for (std::ptrdiff_t k = 1; k <= lags; ++k) {
        rho[k - 1] = lag_product(c.dev, static_cast<std::size_t>(k)) / c.denom;
    }
    return rho;
}

AcfResult acf_from_rho(std::vector<double> rho, std::size_t n, AcfMode mode, std::size_t lb_horizon) {
    AcfResult r;
    r.n = n;
    r.max_lag = rho.size();
    r.rho = std::move(rho);
    r.mode = mode;
    const double K = static_cast<double>(r.max_lag);
    r.se_appendix = 1.0 / std::sqrt(static_cast<double>(n));
    if (r.max_lag >= 2) {
        const double mean = std::accumulate(r.rho.begin(), r.rho.end(), 0.0) / K;
        double ss = 0.0;
        for (double x : r.rho) ss += (x - mean) * (x - mean);
        r.rho_std_dev = std::sqrt(ss / (K - 1.0));
        r.se_paper_table = r.rho_std_dev / std::sqrt(K);
    } else {
        r.rho_std_dev = std::nan("");
        r.se_paper_table = std::nan("");
    }
    const double se = r.se();
    r.t_values.reserve(r.max_lag);
    for (double x : r.rho) r.t_values.push_back(x / se);

    r.lb_horizon = lb_horizon == 0 ? r.max_lag : lb_horizon;
    const TestResult q = ljung_box(r, n, r.lb_horizon);
    r.ljung_box_q = q.statistic;
    r.q_p_value = q.p_value;
    return r;
}

AcfResult acf(std::span<const double> values, std::size_t max_lag, AcfMode mode, std::size_t lb_horizon) {
    return acf_from_rho(autocorrelations(values, max_lag), values.size(), mode, lb_horizon);
}

AcfResult acf(const ReturnSeries& returns, std::size_t max_lag, AcfMode mode, std::size_t lb_horizon) {
    const auto v = returns.values();
    return acf(std::span<const double>(v), max_lag, mode, lb_horizon);
}

TestResult ljung_box(const AcfResult& acf_result, std::size_t n, std::size_t horizon) {
    if (horizon < 1 || horizon > acf_result.rho.size() || acf_result.rho.size() >= n) {
        throw StatError(StatErrorKind::InsufficientData, "ljung_box: need 1 <= h <= K < n");
    }
    double sum = 0.0;
    for (std::size_t k = 1; k <= horizon; ++k) {
        const double r = acf_result.rho[k - 1];
        sum += r * r / static_cast<double>(n - k);
    }
    const double nn = static_cast<double>(n);
    TestResult t;
    t.test_name = "ljung_box";
    t.statistic = nn * (nn + 2.0) * sum;
    t.p_value = stats::chi2_sf(t.statistic, static_cast<int>(horizon));
    t.reject_at_5pct = t.p_value < 0.05;
    t.auxiliary = {{"n", nn}, {"horizon", static_cast<double>(horizon)}};
    return t;
}

}  // namespace effitest::randomness
