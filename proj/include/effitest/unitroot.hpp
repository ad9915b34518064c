#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace effitest::unitroot {

/// Dense column-major regressor matrix.
class DesignMatrix {
public:
    DesignMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }
    [[nodiscard]] std::span<const double> column(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }
    [[nodiscard]] const double* data() const noexcept { return data_.data(); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

struct OlsFit {
    std::vector<double> coefficients;
    std::vector<double> std_errors;
    std::vector<double> t_stats;
    std::vector<double> residuals;
    double rss = 0.0;
    std::size_t n_obs = 0;
    std::size_t n_params = 0;
};

/// Least squares via column-pivoted QR on norm-scaled columns. Throws
/// StatError(SingularDesign) when the design is rank deficient.
OlsFit ols(const DesignMatrix& design, std::span<const double> response);

enum class AdfModel { None, Drift, DriftTrend };
enum class AdfTarget { Returns, LogPrices };

std::optional<AdfModel> parse_adf_model(std::string_view text);
std::string to_string(AdfModel model);
std::optional<AdfTarget> parse_adf_target(std::string_view text);
std::string to_string(AdfTarget target);

struct AdfResult {
    double tau = 0.0;
    std::size_t lags = 0;
    AdfModel model = AdfModel::DriftTrend;
    double p_value = 0.99;
    std::size_t n_obs = 0;  ///< regression sample size
    AdfTarget target = AdfTarget::Returns;

    /// Unit root rejected (series stationary) at 5%.
    [[nodiscard]] bool reject_at_5pct() const { return p_value < 0.05; }
    friend bool operator==(const AdfResult&, const AdfResult&) = default;
};

/// floor((n - 1)^(1/3)); requires n >= 10.
std::size_t default_lag(std::size_t n);

/// Regresses dy_t on y_{t-1}, `lags` lagged differences and the model's
/// deterministic terms; tau is the t-ratio on y_{t-1}.
AdfResult adf_test(std::span<const double> series, std::size_t lags, AdfModel model,
                   AdfTarget target = AdfTarget::Returns);

/// Dickey-Fuller quantile surface: rows are sample sizes, columns are the
/// probabilities in `kQuantileLevels`.
inline constexpr std::array<double, 8> kQuantileLevels{0.01, 0.025, 0.05, 0.10, 0.90, 0.95, 0.975, 0.99};
inline constexpr std::array<double, 6> kSampleSizes{25, 50, 100, 250, 500, 0 /* asymptotic */};

/// Interpolated tau quantile at probability level `kQuantileLevels[level]` for
/// regression size n (linear in 1/n between tabulated sizes).
double critical_value(AdfModel model, std::size_t n, std::size_t level);

/// Interpolated p-value for tau, clamped to [0.01, 0.99].
double adf_pvalue(double tau, AdfModel model, std::size_t n);

}  // namespace effitest::unitroot
