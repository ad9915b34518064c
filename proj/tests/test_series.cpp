#include <gtest/gtest.h>

#include "effitest/errors.hpp"
#include "effitest/series.hpp"
#include "test_support.hpp"

using namespace effitest;

namespace {

PriceSeries simple(std::vector<double> values) {
    return testsupport::prices_on("X", testsupport::weekdays(TradingDate(2020, 1, 6), values.size()), values);
}

}  // namespace

TEST(TradingDate, ParsesAndOrdersChronologically) {
    const auto a = TradingDate::parse_iso("2007-12-01");
    ASSERT_TRUE(a);
    EXPECT_EQ(a->year(), 2007);
    EXPECT_EQ(a->iso(), "2007-12-01");
    EXPECT_LT(TradingDate(2007, 11, 30), *a);
    EXPECT_LT(TradingDate(2006, 12, 31), TradingDate(2007, 1, 1));
    EXPECT_FALSE(TradingDate::parse_iso("2015-02-29"));
    EXPECT_FALSE(TradingDate::parse_iso("2016/04/08"));
    EXPECT_TRUE(TradingDate::parse_iso("2016-02-29"));
    EXPECT_THROW(TradingDate(2015, 13, 1), InputError);
}

TEST(TradingDate, SerialRoundTripAndWeekday) {
    const TradingDate d(2016, 4, 8);
    EXPECT_EQ(TradingDate::from_serial(d.serial()), d);
    EXPECT_EQ(d.weekday(), 4);  // Friday
    EXPECT_EQ(TradingDate(1996, 1, 1).weekday(), 0);
}

TEST(Series, RejectsInvalidObservations) {
    const TradingDate d1(2020, 1, 1), d2(2020, 1, 2);
    EXPECT_THROW(PriceSeries("x", {{d2, 1.0}, {d1, 2.0}}), InputError);
    EXPECT_THROW(PriceSeries("x", {{d1, 1.0}, {d1, 2.0}}), InputError);
    EXPECT_THROW(PriceSeries("x", {{d1, 0.0}}), InputError);
    EXPECT_THROW(ReturnSeries("x", {{d1, -1.0}}), InputError);
    EXPECT_NO_THROW(ReturnSeries("x", {{d1, -0.99}}));
}

TEST(ComputeReturns, Examples) {
    EXPECT_NEAR(compute_returns(simple({100, 110})).values()[0], 0.10, 1e-15);
    const auto flat = compute_returns(simple({100, 100, 100})).values();
    EXPECT_EQ(flat, (std::vector<double>{0.0, 0.0}));
    const auto r = compute_returns(simple({100, 110, 99})).values();
    ASSERT_EQ(r.size(), 2u);
    EXPECT_NEAR(r[0], 0.10, 1e-15);
    EXPECT_NEAR(r[1], -0.10, 1e-15);
}

TEST(ComputeReturns, DatesTakeTheLaterPrice) {
    const auto p = simple({100, 101, 102});
    const auto r = compute_returns(p);
    EXPECT_EQ(r.size(), p.size() - 1);
    EXPECT_EQ(r[0].date, p[1].date);
    EXPECT_EQ(r[1].date, p[2].date);
    EXPECT_THROW((void)compute_returns(simple({100})), InputError);
}

TEST(ComputeReturns, CumulativeReconstruction) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto p = simple(testsupport::price_path(300, seed, 0.03));
        const auto r = compute_returns(p).values();
        double level = p[0].value;
        for (std::size_t i = 0; i < r.size(); ++i) {
            level *= 1.0 + r[i];
            EXPECT_NEAR(level / p[i + 1].value, 1.0, 1e-10);
        }
    }
}

TEST(DefaultScheme, Boundaries) {
    const auto s = default_scheme();
    ASSERT_EQ(s.size(), 5u);
    EXPECT_EQ(s.periods()[0].label, "Full");
    EXPECT_EQ(s.periods()[2].start, TradingDate(2007, 12, 1));
    EXPECT_EQ(s.periods()[3].start, TradingDate(2009, 7, 1));
    EXPECT_EQ(s.periods()[4].end, TradingDate(2016, 4, 8));
    for (std::size_t i = 2; i < s.size(); ++i) {
        EXPECT_LT(s.periods()[i - 1].end, s.periods()[i].start);
    }
}

TEST(PeriodScheme, ParseAndValidate) {
    const auto s = PeriodScheme::parse("A:2020-01-01:2020-06-30,B:2020-07-01:2020-12-31");
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(PeriodScheme::parse(s.to_string()), s);
    EXPECT_EQ(PeriodScheme::parse("default"), default_scheme());
    EXPECT_THROW(PeriodScheme::parse("A:2020-01-01:2020-06-30,B:2020-06-01:2020-12-31"), ConfigError);
    EXPECT_THROW(PeriodScheme::parse("A:2020-01-01:2020-06-30,A:2020-07-01:2020-12-31"), ConfigError);
    EXPECT_THROW(PeriodScheme::parse("A:2020-06-01:2020-01-01"), ConfigError);
    EXPECT_THROW(PeriodScheme::parse("A:2020-01-01"), ConfigError);
    EXPECT_THROW(PeriodScheme::parse("A:2020-01-01:2020-13-01"), ConfigError);
}

TEST(Segment, MidpointSplitAndIdentity) {
    const auto dates = testsupport::weekdays(TradingDate(2020, 1, 6), 10);
    const auto p = testsupport::prices_on("X", dates, std::vector<double>(10, 5.0));
    const PeriodScheme halves({{"a", dates[0], dates[4]}, {"b", dates[5], dates[9]}});
    const auto seg = segment(p, halves);
    EXPECT_EQ(seg.at("a").size(), 5u);
    EXPECT_EQ(seg.at("b").size(), 5u);
    EXPECT_TRUE(seg.warnings.empty());

    const PeriodScheme all({{"all", TradingDate(1990, 1, 1), TradingDate(2030, 1, 1)}});
    EXPECT_EQ(segment(p, all).at("all"), p);
    EXPECT_THROW((void)seg.at("zzz"), ConfigError);
}

TEST(Segment, EmptyPeriodWarns) {
    const auto p = simple({1, 2, 3});
    const PeriodScheme s({{"old", TradingDate(1990, 1, 1), TradingDate(1990, 12, 31)}});
    const auto seg = segment(p, s);
    EXPECT_TRUE(seg.at("old").empty());
    EXPECT_EQ(seg.warnings.size(), 1u);
}

TEST(Segment, PartitionProperty) {
    const auto dates = testsupport::weekdays(TradingDate(2006, 1, 2), 1500);
    const auto p = testsupport::prices_on("X", dates, testsupport::price_path(dates.size(), 3));
    const auto returns = compute_returns(p);
    const auto scheme = default_scheme();
    const auto seg = segment(returns, scheme);
    std::size_t total = 0;
    std::vector<TradingDate> seen;
    for (std::size_t i = 1; i < seg.parts.size(); ++i) {  // skip the envelope column
        for (const auto& o : seg.parts[i].second.observations()) {
            EXPECT_TRUE(scheme.periods()[i].contains(o.date));
            seen.push_back(o.date);
        }
        total += seg.parts[i].second.size();
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_TRUE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    EXPECT_LE(total, returns.size());
    EXPECT_EQ(seg.parts[0].second.size(), returns.size());
}

TEST(Segment, ReturnsOfSegmentMatchSegmentOfReturnsAwayFromBoundaries) {
    const auto dates = testsupport::weekdays(TradingDate(2007, 6, 1), 800);
    const auto p = testsupport::prices_on("X", dates, testsupport::price_path(dates.size(), 9));
    const auto scheme = default_scheme();
    const auto seg_r = segment(compute_returns(p), scheme);
    const auto seg_p = segment(p, scheme);
    for (std::size_t i = 0; i < scheme.size(); ++i) {
        const auto& prices = seg_p.parts[i].second;
        if (prices.size() < 2) continue;
        const auto inner = compute_returns(prices);
        const auto& outer = seg_r.parts[i].second;
        // The segmented return series keeps the boundary return (dated at the period's first price).
        ASSERT_EQ(outer.size(), inner.size() + (outer[0].date == prices[0].date ? 1 : 0));
        const std::size_t off = outer.size() - inner.size();
        for (std::size_t k = 0; k < inner.size(); ++k) {
            EXPECT_EQ(outer[k + off].date, inner[k].date);
            EXPECT_NEAR(outer[k + off].value, inner[k].value, 1e-15);
        }
    }
}
