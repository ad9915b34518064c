#include "effitest/unitroot.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "effitest/errors.hpp"

namespace effitest::unitroot {

OlsFit ols(const DesignMatrix& design, std::span<const double> response) {
    const auto n = static_cast<Eigen::Index>(design.rows());
    const auto p = static_cast<Eigen::Index>(design.cols());
    if (design.rows() != response.size()) {
        throw StatError(StatErrorKind::Domain, "ols: design rows and response length differ");
    }
    if (p == 0 || n <= p) {
        throw StatError(StatErrorKind::InsufficientData, "ols: need more observations than parameters");
    }
    const Eigen::Map<const Eigen::MatrixXd> X(design.data(), n, p);
    const Eigen::Map<const Eigen::VectorXd> y(response.data(), n);

    Eigen::VectorXd scale = X.colwise().norm().transpose();
    for (Eigen::Index j = 0; j < p; ++j) {
        if (!(scale(j) > 0.0) || !std::isfinite(scale(j))) {
            throw StatError(StatErrorKind::SingularDesign, "ols: zero or non-finite design column");
        }
    }
    const Eigen::MatrixXd Xs = X * scale.cwiseInverse().asDiagonal();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xs);
    qr.setThreshold(1e-9);
    if (qr.rank() < p) throw StatError(StatErrorKind::SingularDesign, "ols: rank-deficient design");

    const Eigen::VectorXd beta_s = qr.solve(y);
    const Eigen::VectorXd resid = y - Xs * beta_s;

    // (Xs'Xs)^-1 = P R^-1 R^-T P'
    const Eigen::MatrixXd R = qr.matrixR().topLeftCorner(p, p).template triangularView<Eigen::Upper>();
    const Eigen::MatrixXd Rinv =
        R.template triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
    const Eigen::MatrixXd inv_perm = Rinv * Rinv.transpose();
    const auto& perm = qr.colsPermutation();
    const Eigen::MatrixXd xtx_inv = perm * inv_perm * perm.transpose();

    OlsFit fit;
    fit.n_obs = design.rows();
    fit.n_params = design.cols();
    fit.rss = resid.squaredNorm();
    const double s2 = fit.rss / static_cast<double>(n - p);
    fit.coefficients.resize(p);
    fit.std_errors.resize(p);
    fit.t_stats.resize(p);
    for (Eigen::Index j = 0; j < p; ++j) {
        fit.coefficients[j] = beta_s(j) / scale(j);
        fit.std_errors[j] = std::sqrt(s2 * xtx_inv(j, j)) / scale(j);
        fit.t_stats[j] = fit.coefficients[j] / fit.std_errors[j];
    }
    fit.residuals.assign(resid.data(), resid.data() + n);
    return fit;
}

std::optional<AdfModel> parse_adf_model(std::string_view text) {
    if (text == "none") return AdfModel::None;
    if (text == "drift") return AdfModel::Drift;
    if (text == "drift_trend" || text == "trend") return AdfModel::DriftTrend;
    return std::nullopt;
}

std::string to_string(AdfModel model) {
    switch (model) {
        case AdfModel::None: return "none";
        case AdfModel::Drift: return "drift";
        case AdfModel::DriftTrend: return "drift_trend";
    }
    return "drift_trend";
}

std::optional<AdfTarget> parse_adf_target(std::string_view text) {
    if (text == "returns") return AdfTarget::Returns;
    if (text == "log_prices") return AdfTarget::LogPrices;
    return std::nullopt;
}

std::string to_string(AdfTarget target) { return target == AdfTarget::Returns ? "returns" : "log_prices"; }

std::size_t default_lag(std::size_t n) {
    if (n < 10) throw StatError(StatErrorKind::InsufficientData, "default_lag: need n >= 10");
    const std::size_t m = n - 1;
    std::size_t q = static_cast<std::size_t>(std::cbrt(static_cast<double>(m)));
    while ((q + 1) * (q + 1) * (q + 1) <= m) ++q;
    while (q * q * q > m) --q;
    return q;
}

AdfResult adf_test(std::span<const double> series, std::size_t lags, AdfModel model, AdfTarget target) {
    const std::size_t N = series.size();
    if (N < lags + 10) {
        throw StatError(StatErrorKind::InsufficientData, "adf: series of length " + std::to_string(N) +
                                                             " too short for " + std::to_string(lags) + " lags");
    }
    for (double v : series) {
        if (!std::isfinite(v)) throw StatError(StatErrorKind::Domain, "adf: non-finite value in series");
    }
    if (std::all_of(series.begin(), series.end(), [&](double v) { return v == series[0]; })) {
        throw StatError(StatErrorKind::SingularDesign, "adf: constant series");
    }

    std::vector<double> diff(N - 1);
    for (std::size_t t = 1; t < N; ++t) diff[t - 1] = series[t] - series[t - 1];

    // Row i uses response diff[t-1] = y_t - y_{t-1} for t = lags + 1 .. N - 1.
    const std::size_t rows = N - 1 - lags;
    const std::size_t det = model == AdfModel::None ? 0 : (model == AdfModel::Drift ? 1 : 2);
    DesignMatrix X(rows, 1 + det + lags);
    std::vector<double> response(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t t = lags + 1 + i;
        response[i] = diff[t - 1];
        std::size_t c = 0;
        X(i, c++) = series[t - 1];
        if (det >= 1) X(i, c++) = 1.0;
        if (det >= 2) X(i, c++) = static_cast<double>(t);
        for (std::size_t j = 1; j <= lags; ++j) X(i, c++) = diff[t - 1 - j];
    }

    const OlsFit fit = ols(X, response);
    AdfResult r;
    r.tau = fit.t_stats[0];
    r.lags = lags;
    r.model = model;
    r.n_obs = rows;
    r.target = target;
    r.p_value = adf_pvalue(r.tau, model, rows);
    return r;
}

namespace {

// Dickey-Fuller tau quantiles (Fuller 1976, Table 8.5.2).
using Surface = std::array<std::array<double, 8>, 6>;

constexpr Surface kNoConstant{{
    {-2.66, -2.26, -1.95, -1.60, 0.92, 1.33, 1.70, 2.16},
    {-2.62, -2.25, -1.95, -1.61, 0.91, 1.31, 1.66, 2.08},
    {-2.60, -2.24, -1.95, -1.61, 0.90, 1.29, 1.64, 2.03},
    {-2.58, -2.23, -1.95, -1.62, 0.89, 1.29, 1.63, 2.01},
    {-2.58, -2.23, -1.95, -1.62, 0.89, 1.28, 1.62, 2.00},
    {-2.58, -2.23, -1.95, -1.62, 0.89, 1.28, 1.62, 2.00},
}};

constexpr Surface kConstant{{
    {-3.75, -3.33, -3.00, -2.63, -0.37, 0.00, 0.34, 0.72},
    {-3.58, -3.22, -2.93, -2.60, -0.40, -0.03, 0.29, 0.66},
    {-3.51, -3.17, -2.89, -2.58, -0.42, -0.05, 0.26, 0.63},
    {-3.46, -3.14, -2.88, -2.57, -0.42, -0.06, 0.24, 0.62},
    {-3.44, -3.13, -2.87, -2.57, -0.43, -0.07, 0.24, 0.61},
    {-3.43, -3.12, -2.86, -2.57, -0.44, -0.07, 0.23, 0.60},
}};

constexpr Surface kConstantTrend{{
    {-4.38, -3.95, -3.60, -3.24, -1.14, -0.80, -0.50, -0.15},
    {-4.15, -3.80, -3.50, -3.18, -1.19, -0.87, -0.58, -0.24},
    {-4.04, -3.73, -3.45, -3.15, -1.22, -0.90, -0.62, -0.28},
    {-3.99, -3.69, -3.43, -3.13, -1.23, -0.92, -0.64, -0.31},
    {-3.98, -3.68, -3.42, -3.13, -1.24, -0.93, -0.65, -0.32},
    {-3.96, -3.66, -3.41, -3.12, -1.25, -0.94, -0.66, -0.33},
}};

const Surface& surface(AdfModel model) {
    switch (model) {
        case AdfModel::None: return kNoConstant;
        case AdfModel::Drift: return kConstant;
        case AdfModel::DriftTrend: return kConstantTrend;
    }
    return kConstantTrend;
}

}  // namespace

double critical_value(AdfModel model, std::size_t n, std::size_t level) {
    const Surface& s = surface(model);
    const double inv_n = 1.0 / static_cast<double>(std::max<std::size_t>(n, 1));
    // Tabulated sizes in 1/T: 0.04, 0.02, 0.01, 0.004, 0.002, 0.
    if (inv_n >= 1.0 / kSampleSizes[0]) return s[0][level];
    for (std::size_t i = 0; i + 1 < kSampleSizes.size(); ++i) {
        const double hi = 1.0 / kSampleSizes[i];
        const double lo = kSampleSizes[i + 1] == 0 ? 0.0 : 1.0 / kSampleSizes[i + 1];
        if (inv_n <= hi && inv_n >= lo) {
            const double w = (inv_n - lo) / (hi - lo);
            return w * s[i][level] + (1.0 - w) * s[i + 1][level];
        }
    }
    return s.back()[level];
}

double adf_pvalue(double tau, AdfModel model, std::size_t n) {
    if (std::isnan(tau)) throw StatError(StatErrorKind::Domain, "adf_pvalue: NaN statistic");
    std::array<double, kQuantileLevels.size()> q{};
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = critical_value(model, n, i);
    if (tau <= q.front()) return kQuantileLevels.front();
    if (tau >= q.back()) return kQuantileLevels.back();
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        if (tau <= q[i + 1]) {
            const double w = (tau - q[i]) / (q[i + 1] - q[i]);
            return kQuantileLevels[i] + w * (kQuantileLevels[i + 1] - kQuantileLevels[i]);
        }
    }
    return kQuantileLevels.back();
}

}  // namespace effitest::unitroot
