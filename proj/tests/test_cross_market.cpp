#include <gtest/gtest.h>

#include <cmath>

#include "effitest/cross_market.hpp"
#include "effitest/errors.hpp"
#include "test_support.hpp"

using namespace effitest;
using namespace effitest::cross;

TEST(Align, IdenticalCalendars) {
    const auto dates = testsupport::weekdays(TradingDate(2010, 1, 4), 50);
    const auto a = testsupport::prices_on("A", dates, testsupport::price_path(50, 1));
    const auto b = testsupport::prices_on("B", dates, testsupport::price_path(50, 2));
    const auto p = align(a, b);
    EXPECT_EQ(p.dates, std::vector<TradingDate>(dates.begin(), dates.end()));
    EXPECT_EQ(p.a_values, a.values());
    EXPECT_EQ(p.b_values, b.values());
    EXPECT_EQ(p.fill_count_a + p.fill_count_b, 0u);
    EXPECT_EQ(p.series_a("A"), a);
}

TEST(Align, MissingWednesdayTakesTuesdayClose) {
    const auto week = testsupport::weekdays(TradingDate(2016, 4, 4), 5);  // Mon..Fri
    ASSERT_EQ(week[2].weekday(), 2);
    const auto a = testsupport::prices_on("A", week, {1, 2, 3, 4, 5});
    const auto b = testsupport::prices_on("B", {week[0], week[1], week[3], week[4]}, {10, 11, 13, 14});
    const auto p = align(a, b);
    ASSERT_EQ(p.size(), 5u);
    EXPECT_EQ(p.b_values[2], 11.0);
    EXPECT_EQ(p.fill_count_b, 1u);
    EXPECT_EQ(p.fill_count_a, 0u);
    EXPECT_EQ(p.filled_dates_b, std::vector<TradingDate>{week[2]});
}

TEST(Align, DisjointRangesFail) {
    const auto a = testsupport::prices_on("A", testsupport::weekdays(TradingDate(2001, 1, 1), 10),
                                          std::vector<double>(10, 1.0));
    const auto b = testsupport::prices_on("B", testsupport::weekdays(TradingDate(2005, 1, 3), 10),
                                          std::vector<double>(10, 1.0));
    try {
        (void)align(a, b);
        FAIL();
    } catch (const StatError& e) {
        EXPECT_EQ(e.kind(), StatErrorKind::Alignment);
    }
}

TEST(Align, GapsAreFilledExactlyAndIdempotent) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto cal = testsupport::weekdays(TradingDate(2012, 1, 2), 400);
        const auto px = testsupport::price_path(cal.size(), seed);
        std::vector<TradingDate> da, db;
        std::vector<double> va, vb;
        std::vector<TradingDate> gaps_a, gaps_b;
        for (std::size_t i = 0; i < cal.size(); ++i) {
            const bool drop_a = i > 0 && i + 1 < cal.size() && i % (7 + seed) == 3;
            const bool drop_b = i > 0 && i + 1 < cal.size() && !drop_a && i % (11 + seed) == 5;
            if (drop_a) gaps_a.push_back(cal[i]);
            else {
                da.push_back(cal[i]);
                va.push_back(px[i]);
            }
            if (drop_b) gaps_b.push_back(cal[i]);
            else {
                db.push_back(cal[i]);
                vb.push_back(px[i]);
            }
        }
        const auto a = testsupport::prices_on("A", da, va);
        const auto b = testsupport::prices_on("B", db, vb);
        const auto p = align(a, b);
        EXPECT_EQ(p.filled_dates_a, gaps_a);
        EXPECT_EQ(p.filled_dates_b, gaps_b);
        EXPECT_EQ(p.fill_count_a, gaps_a.size());
        EXPECT_LE(p.fill_count_a, p.size());
        EXPECT_TRUE(std::is_sorted(p.dates.begin(), p.dates.end()));

        // Filled closes repeat the previous close, so the aligned return is exactly zero there.
        const auto ra = compute_returns(p.series_a("A"));
        for (const auto& g : gaps_a) {
            const auto it = std::find_if(ra.observations().begin(), ra.observations().end(),
                                         [&](const Observation& o) { return o.date == g; });
            ASSERT_NE(it, ra.observations().end());
            EXPECT_EQ(it->value, 0.0);
        }

        const auto again = align(p.series_a("A"), p.series_b("B"));
        EXPECT_EQ(again.dates, p.dates);
        EXPECT_EQ(again.a_values, p.a_values);
        EXPECT_EQ(again.b_values, p.b_values);
        EXPECT_EQ(again.fill_count_a + again.fill_count_b, 0u);
    }
}

TEST(Pearson, Examples) {
    const std::vector<double> x{1, 2, 3, 4, 5};
    std::vector<double> neg(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
    EXPECT_DOUBLE_EQ(pearson(x, x), 1.0);
    EXPECT_DOUBLE_EQ(pearson(x, neg), -1.0);
    EXPECT_NEAR(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2, 4}), 0.98198, 1e-5);
    EXPECT_THROW((void)pearson(x, std::vector<double>(5, 1.0)), StatError);
    EXPECT_THROW((void)pearson(std::vector<double>{1, 2}, std::vector<double>{1, 2}), StatError);
    EXPECT_THROW((void)pearson(x, std::vector<double>{1, 2}), StatError);
}

TEST(Pearson, AffineInvariance) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto x = testsupport::gaussian(300, seed);
        auto y = testsupport::gaussian(300, seed + 50);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += 0.5 * x[i];
        const double r = pearson(x, y);
        auto xt = x, yt = y;
        for (auto& v : xt) v = 4.0 * v - 2.0;
        for (auto& v : yt) v = 0.01 * v + 100.0;
        EXPECT_NEAR(pearson(xt, yt), r, 1e-12);
        EXPECT_LE(std::fabs(r), 1.0);
    }
}
