#include <gtest/gtest.h>

#include <cmath>

#include "effitest/errors.hpp"
#include "effitest/randomness.hpp"
#include "test_support.hpp"

using namespace effitest;
using namespace effitest::randomness;

namespace {

// Direct double loop with the full-sample mean.
std::vector<double> acf_oracle(const std::vector<double>& x, std::size_t K) {
    const std::size_t n = x.size();
    long double mean = 0;
    for (double v : x) mean += v;
    mean /= n;
    long double den = 0;
    for (double v : x) den += (v - mean) * (v - mean);
    std::vector<double> rho(K);
    for (std::size_t k = 1; k <= K; ++k) {
        long double num = 0;
        for (std::size_t t = k; t < n; ++t) num += (x[t] - mean) * (x[t - k] - mean);
        rho[k - 1] = static_cast<double>(num / den);
    }
    return rho;
}

}  // namespace

TEST(Runs, AlternatingSigns) {
    std::vector<double> x(20);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = i % 2 ? -1.0 : 1.0;
    const auto r = runs_test(x, RunsReference::Zero);
    EXPECT_EQ(r.n_runs, 20u);
    EXPECT_EQ(r.n_above, 10u);
    EXPECT_EQ(r.n_below, 10u);
    const double sigma = std::sqrt(200.0 * 180.0 / (400.0 * 19.0));
    EXPECT_NEAR(r.z, 9.0 / sigma, 1e-12);
    EXPECT_NEAR(r.z, 4.13, 0.01);
    EXPECT_TRUE(r.reject_at_5pct());
}

TEST(Runs, TwoBlocks) {
    std::vector<double> x(20, 1.0);
    std::fill(x.begin() + 10, x.end(), -1.0);
    const auto r = runs_test(x, RunsReference::Zero);
    EXPECT_EQ(r.n_runs, 2u);
    EXPECT_LT(r.z, -3.0);
    EXPECT_TRUE(r.reject_at_5pct());
}

TEST(Runs, TableCounts) {
    const auto r = runs_from_counts(2488, 2665, 2477);
    EXPECT_NEAR(std::fabs(r.z), 2.70, 0.05);
    EXPECT_GE(r.p_value, 0.005);
    EXPECT_LE(r.p_value, 0.009);
    EXPECT_THROW((void)runs_from_counts(0, 5, 1), StatError);
}

TEST(Runs, TiesExcludedButCounted) {
    const std::vector<double> x{1, 0, -1, 0, 2, -2, 3, -3, 0, 4};
    const auto r = runs_test(x, RunsReference::Zero);
    EXPECT_EQ(r.n_equal, 3u);
    EXPECT_EQ(r.n_above + r.n_below + r.n_equal, r.n);
    EXPECT_EQ(r.n_runs, 7u);  // + - + - + - +
    EXPECT_LE(r.n_runs, r.n_above + r.n_below);
    const auto t = r.as_test_result();
    EXPECT_DOUBLE_EQ(t.statistic, r.z);
    EXPECT_EQ(t.reject_at_5pct, r.reject_at_5pct());
}

TEST(Runs, MeanReferenceAndDegenerate) {
    const std::vector<double> x{5, 6, 7, 8};
    const auto r = runs_test(x, RunsReference::Mean);
    EXPECT_EQ(r.n_above, 2u);
    EXPECT_EQ(r.n_runs, 2u);
    EXPECT_THROW((void)runs_test(x, RunsReference::Zero), StatError);
}

TEST(Runs, InvariantUnderSignPreservingTransforms) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto x = testsupport::gaussian(300, seed);
        auto doubled = x, cubed = x;
        for (auto& v : doubled) v *= 2.0;
        for (auto& v : cubed) v = v * v * v;
        const auto r = runs_test(x, RunsReference::Zero);
        EXPECT_EQ(runs_test(doubled, RunsReference::Zero), r);
        EXPECT_EQ(runs_test(cubed, RunsReference::Zero), r);
        EXPECT_GE(r.p_value, 0.0);
        EXPECT_LE(r.p_value, 1.0);
    }
}

TEST(Acf, HandExample) {
    const std::vector<double> y{1, 2, 3, 4, 5};
    EXPECT_NEAR(autocorrelations(y, 1)[0], 0.4, 1e-15);
}

TEST(Acf, MatchesDoubleLoopOracle) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::size_t n = 50 + 97 * seed;
        const auto x = testsupport::gaussian(n, seed, 0.001, 0.02);
        const auto oracle = acf_oracle(x, 20);
        const auto par = autocorrelations(x, 20);
        const auto ser = autocorrelations_serial(x, 20);
        for (std::size_t k = 0; k < 20; ++k) {
            EXPECT_NEAR(par[k], oracle[k], 1e-12);
            EXPECT_NEAR(ser[k], oracle[k], 1e-12);
            EXPECT_LE(std::fabs(par[k]), 1.0);
        }
    }
}

TEST(Acf, ParallelPathMatchesSerial) {
    const auto x = testsupport::gaussian(30000, 5);
    const auto a = autocorrelations(x, 40);
    const auto b = autocorrelations_serial(x, 40);
    for (std::size_t k = 0; k < 40; ++k) EXPECT_NEAR(a[k], b[k], 1e-14);
}

TEST(Acf, TimeReversalSymmetry) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto x = testsupport::gaussian(500, seed);
        const auto fwd = autocorrelations(x, 20);
        std::reverse(x.begin(), x.end());
        const auto rev = autocorrelations(x, 20);
        for (std::size_t k = 0; k < 20; ++k) EXPECT_NEAR(fwd[k], rev[k], 1e-12);
    }
}

TEST(Acf, WhiteNoiseStaysSmall) {
    int good = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        const auto x = testsupport::gaussian(10000, 1000 + t);
        const auto rho = autocorrelations(x, 20);
        good += std::all_of(rho.begin(), rho.end(), [](double r) { return std::fabs(r) < 0.05; });
    }
    EXPECT_GE(good, static_cast<int>(0.99 * trials));
}

TEST(Acf, Errors) {
    EXPECT_THROW((void)autocorrelations(std::vector<double>{1, 2, 3}, 3), StatError);
    EXPECT_THROW((void)autocorrelations(std::vector<double>{1, 2, 3}, 0), StatError);
    EXPECT_THROW((void)autocorrelations(std::vector<double>(30, 2.0), 5), StatError);
}

TEST(Acf, StandardErrorModes) {
    const std::vector<double> rho{0.0319, -0.0505, 0.0576, 0.083, 0.0057, -0.0555, 0.0184, 0.0256, -0.0224, -0.0206,
                                  0.0203, 0.0405,  0.0637, -0.0263, 0.0635, 0.0225, -0.0055, 0.0139, -0.0484, 0.0215};
    const auto paper = acf_from_rho(rho, 5153, AcfMode::PaperTable);
    EXPECT_NEAR(paper.se(), 0.008933, 1e-6);
    EXPECT_NEAR(paper.t_values[0], 3.57, 0.01);
    EXPECT_NEAR(paper.t_values[1], -5.65, 0.01);
    const auto app = acf_from_rho(rho, 5153, AcfMode::Appendix);
    EXPECT_NEAR(app.se(), 1.0 / std::sqrt(5153.0), 1e-15);
    EXPECT_DOUBLE_EQ(app.se_paper_table, paper.se_paper_table);
    EXPECT_NEAR(app.t_values[0], 0.0319 * std::sqrt(5153.0), 1e-12);
    EXPECT_EQ(app.t_values.size(), rho.size());
    EXPECT_GE(app.q_p_value, 0.0);
    EXPECT_LE(app.q_p_value, 1.0);
}

TEST(LjungBox, Examples) {
    const auto zero = acf_from_rho(std::vector<double>(5, 0.0), 100, AcfMode::Appendix);
    const auto r0 = ljung_box(zero, 100, 5);
    EXPECT_DOUBLE_EQ(r0.statistic, 0.0);
    EXPECT_DOUBLE_EQ(r0.p_value, 1.0);

    const auto one = acf_from_rho({0.1}, 400, AcfMode::Appendix);
    const auto r1 = ljung_box(one, 400, 1);
    EXPECT_NEAR(r1.statistic, 400.0 * 402.0 * 0.01 / 399.0, 1e-12);
    EXPECT_NEAR(r1.statistic, 4.030, 0.001);
    EXPECT_NEAR(r1.p_value, 0.0447, 0.0005);
    EXPECT_THROW((void)ljung_box(one, 400, 2), StatError);
}

TEST(LjungBox, NullMeanMatchesHorizon) {
    const int trials = 2000;
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) {
        const auto x = testsupport::gaussian(10000, 50000 + t);
        sum += acf(x, 20, AcfMode::Appendix, 20).ljung_box_q;
    }
    const double mean = sum / trials;
    EXPECT_GE(mean, 18.5);
    EXPECT_LE(mean, 21.5);
}
