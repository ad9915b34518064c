#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "effitest/series.hpp"
#include "effitest/test_result.hpp"

namespace effitest::randomness {

enum class RunsReference { Mean, Zero };

/// Wald-Wolfowitz runs test counts. Values equal to the reference are counted
/// in `n_equal` and left out of the run sequence.
struct RunsResult {
    std::size_t n = 0;
    std::size_t n_runs = 0;
    std::size_t n_above = 0;
    std::size_t n_below = 0;
    std::size_t n_equal = 0;
    double z = 0.0;
    double p_value = 1.0;
    RunsReference reference = RunsReference::Mean;

    /// The printed tables reject when |Z| > 1.96.
    [[nodiscard]] bool reject_at_5pct() const { return z > 1.96 || z < -1.96; }
    [[nodiscard]] TestResult as_test_result() const;
    friend bool operator==(const RunsResult&, const RunsResult&) = default;
};

/// Z and two-sided p from run/sign counts (large-sample normal approximation,
/// no continuity correction).
RunsResult runs_from_counts(std::size_t n_above, std::size_t n_below, std::size_t n_runs);

/// Throws StatError(DegenerateClassification) unless both sides are non-empty.
RunsResult runs_test(std::span<const double> values, RunsReference reference);
RunsResult runs_test(const ReturnSeries& returns, RunsReference reference);

/// Standard error convention for ACF t-values.
enum class AcfMode {
    Appendix,    ///< se = 1 / sqrt(n)
    PaperTable,  ///< se = sd(rho_1..rho_K) / sqrt(K)
};

struct AcfResult {
    std::size_t n = 0;
    std::size_t max_lag = 0;
    std::vector<double> rho;  ///< rho[k-1] is lag k
    double se_appendix = 0.0;
    double se_paper_table = 0.0;
    double rho_std_dev = 0.0;  ///< sd(rho_1..rho_K), divisor K - 1
    std::vector<double> t_values;
    AcfMode mode = AcfMode::Appendix;
    std::size_t lb_horizon = 0;
    double ljung_box_q = 0.0;
    double q_p_value = 1.0;

    [[nodiscard]] double se() const { return mode == AcfMode::Appendix ? se_appendix : se_paper_table; }
    /// Number of lags with |t| > 1.96.
    [[nodiscard]] std::size_t significant_lags() const;
    friend bool operator==(const AcfResult&, const AcfResult&) = default;
};

/// Sample autocorrelations rho_1..rho_K about the full-sample mean. Parallel
/// over lags; bit-identical to `autocorrelations_serial`.
std::vector<double> autocorrelations(std::span<const double> values, std::size_t max_lag);
std::vector<double> autocorrelations_serial(std::span<const double> values, std::size_t max_lag);

/// Builds an AcfResult from precomputed coefficients (e.g. a printed table).
AcfResult acf_from_rho(std::vector<double> rho, std::size_t n, AcfMode mode, std::size_t lb_horizon = 0);

/// Requires n > K >= 1 and a non-constant series. `lb_horizon` 0 means K.
AcfResult acf(std::span<const double> values, std::size_t max_lag, AcfMode mode = AcfMode::Appendix,
              std::size_t lb_horizon = 0);
AcfResult acf(const ReturnSeries& returns, std::size_t max_lag, AcfMode mode = AcfMode::Appendix,
              std::size_t lb_horizon = 0);

/// Q = n(n+2) sum_{k<=h} rho_k^2 / (n-k), p from chi-square with h d.o.f.
TestResult ljung_box(const AcfResult& acf_result, std::size_t n, std::size_t horizon);

}  // namespace effitest::randomness
