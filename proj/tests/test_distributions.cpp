#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "effitest/descriptive.hpp"
#include "effitest/distributions.hpp"
#include "effitest/errors.hpp"
#include "test_support.hpp"

using namespace effitest;
using namespace effitest::stats;

namespace {

// Phi(x) = 1/2 + phi(x) * sum_k x^(2k+1) / (1*3*...*(2k+1)).
long double phi_series(long double x) {
    long double term = x, sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= x * x / (2 * k + 1);
        sum += term;
    }
    return 0.5L + std::exp(-0.5L * x * x) / std::sqrt(2.0L * std::numbers::pi_v<long double>) * sum;
}

// Composite Simpson integration of the chi-square density.
double chi2_sf_quadrature(double x, int df) {
    const double k = 0.5 * df;
    auto pdf = [&](double t) {
        if (t <= 0.0) return 0.0;
        return std::exp((k - 1.0) * std::log(t) - 0.5 * t - k * std::log(2.0) - std::lgamma(k));
    };
    const int m = 200000;
    const double h = x / m;
    double s = pdf(0.0) + pdf(x);
    for (int i = 1; i < m; ++i) s += pdf(i * h) * (i % 2 ? 4.0 : 2.0);
    return 1.0 - s * h / 3.0;
}

}  // namespace

TEST(Normal, CdfValues) {
    EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
    EXPECT_NEAR(normal_cdf(1.96), 0.9750021, 1e-6);
    for (double x : {-6.0, -3.3, -1.0, -0.2, 0.4, 1.7, 2.5, 5.0}) {
        EXPECT_NEAR(normal_cdf(x), static_cast<double>(phi_series(x)), 1e-14) << x;
        EXPECT_NEAR(normal_cdf(-x), 1.0 - normal_cdf(x), 1e-15) << x;
        EXPECT_NEAR(normal_sf(x), normal_cdf(-x), 1e-15) << x;
    }
    EXPECT_NEAR(two_sided_normal_p(1.96), 0.0499958, 1e-6);
    EXPECT_DOUBLE_EQ(two_sided_normal_p(-2.0), two_sided_normal_p(2.0));
}

TEST(Normal, InverseRoundTrip) {
    for (double p = 1e-12; p < 1.0; p = p < 0.01 ? p * 10.0 : p + 0.01) {
        const double x = normal_icdf(p);
        const double back = x < 0 ? normal_cdf(x) : 1.0 - normal_sf(x);
        EXPECT_NEAR(back, p, 1e-13 + 1e-10 * p) << p;
    }
    EXPECT_NEAR(normal_icdf(0.975), 1.959963984540054, 1e-12);
    EXPECT_NEAR(normal_icdf(1e-10), -6.361340902404056, 1e-9);
    EXPECT_DOUBLE_EQ(normal_icdf(0.5), 0.0);
    EXPECT_THROW((void)normal_icdf(0.0), StatError);
    EXPECT_THROW((void)normal_icdf(1.0), StatError);
    EXPECT_THROW((void)normal_icdf(std::nan("")), StatError);
}

TEST(ChiSquare, Values) {
    EXPECT_DOUBLE_EQ(chi2_sf(0.0, 7), 1.0);
    for (double x : {0.1, 1.0, 3.7, 12.0, 40.0}) EXPECT_NEAR(chi2_sf(x, 2), std::exp(-x / 2.0), 1e-15);
    EXPECT_NEAR(chi2_sf(31.410, 20), 0.050, 0.001);
    EXPECT_NEAR(chi2_sf(31.410, 20), chi2_sf_quadrature(31.410, 20), 1e-9);
    EXPECT_NEAR(chi2_sf(5.991, 2), 0.05, 1e-4);
    EXPECT_THROW((void)chi2_sf(1.0, 0), StatError);
}

TEST(Describe, HandMoments) {
    const std::vector<double> x{-1, 0, 1};
    const auto s = describe(x);
    EXPECT_EQ(s.n, 3u);
    EXPECT_DOUBLE_EQ(s.mean, 0.0);
    EXPECT_DOUBLE_EQ(s.skewness, 0.0);
    EXPECT_DOUBLE_EQ(s.kurtosis, 1.5);
    EXPECT_DOUBLE_EQ(s.std_dev, 1.0);
    EXPECT_EQ(s.min, -1.0);
    EXPECT_EQ(s.max, 1.0);
}

TEST(Describe, Degenerate) {
    const std::vector<double> flat(10, 0.25);
    try {
        (void)describe(flat);
        FAIL();
    } catch (const StatError& e) {
        EXPECT_EQ(e.kind(), StatErrorKind::ZeroVariance);
    }
    EXPECT_THROW((void)describe(std::vector<double>{1.0}), StatError);
}

TEST(Describe, TranslationAndScale) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto x = testsupport::gaussian(400, seed);
        for (auto& v : x) v = v * v * v;  // skewed, heavy tailed
        const auto base = describe(x);
        EXPECT_LE(base.min, base.mean);
        EXPECT_LE(base.mean, base.max);
        auto shifted = x;
        for (auto& v : shifted) v += 3.5;
        const auto t = describe(shifted);
        EXPECT_NEAR(t.mean, base.mean + 3.5, 1e-12);
        EXPECT_NEAR(t.std_dev, base.std_dev, 1e-12);
        EXPECT_NEAR(t.skewness, base.skewness, 1e-12);
        EXPECT_NEAR(t.kurtosis, base.kurtosis, 1e-12);
        auto scaled = x;
        for (auto& v : scaled) v *= 0.37;
        const auto sc = describe(scaled);
        EXPECT_NEAR(sc.mean, 0.37 * base.mean, 1e-12);
        EXPECT_NEAR(sc.std_dev, 0.37 * base.std_dev, 1e-12);
        EXPECT_NEAR(sc.min, 0.37 * base.min, 1e-12);
        EXPECT_NEAR(sc.max, 0.37 * base.max, 1e-12);
        EXPECT_NEAR(sc.skewness, base.skewness, 1e-12);
        EXPECT_NEAR(sc.kurtosis, base.kurtosis, 1e-12);
    }
}

TEST(JarqueBera, Examples) {
    DescriptiveStats s;
    s.n = 100;
    s.skewness = 0.0;
    s.kurtosis = 3.0;
    auto r = jarque_bera(s);
    EXPECT_DOUBLE_EQ(r.statistic, 0.0);
    EXPECT_DOUBLE_EQ(r.p_value, 1.0);
    EXPECT_FALSE(r.reject_at_5pct);

    s.skewness = 0.5;
    s.kurtosis = 4.0;
    EXPECT_NEAR(jarque_bera(s).statistic, 8.3333333333, 1e-9);

    s.n = 5153;
    s.skewness = -0.1836;
    s.kurtosis = 7.9450;
    r = jarque_bera(s);
    EXPECT_NEAR(r.statistic, 5279.1, 0.5);
    EXPECT_LT(r.p_value, 1e-12);
    EXPECT_TRUE(r.reject_at_5pct);
}

TEST(JarqueBera, NonNegativeAndZeroOnlyAtNormalMoments) {
    DescriptiveStats s;
    s.n = 250;
    for (double sk = -2.0; sk <= 2.0; sk += 0.25) {
        for (double ku = 1.0; ku <= 9.0; ku += 0.5) {
            s.skewness = sk;
            s.kurtosis = ku;
            const auto r = jarque_bera(s);
            EXPECT_GE(r.statistic, 0.0);
            EXPECT_EQ(r.statistic == 0.0, sk == 0.0 && ku == 3.0);
            EXPECT_GE(r.p_value, 0.0);
            EXPECT_LE(r.p_value, 1.0);
            EXPECT_EQ(r.reject_at_5pct, r.p_value < 0.05);
        }
    }
}
