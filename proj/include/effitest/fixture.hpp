#pragma once

#include <cstdint>
#include <string>

namespace effitest::fixture {

inline constexpr std::uint64_t kDefaultSeed = 20160408;

/// Two synthetic daily indices on independent trading calendars
/// (1996-01-01..2016-04-08) with per-regime volatility, a shared factor and
/// occasional fat-tailed shocks, plus a config that analyzes both.
struct FixtureData {
    std::string syn_a_csv;  ///< Date,Close
    std::string syn_b_csv;  ///< Date,Open,High,Low,Close,Adj Close,Volume
    std::string config;     ///< refers to syn_a.csv / syn_b.csv relative to itself
};

FixtureData make_fixture(std::uint64_t seed = kDefaultSeed);

/// Writes syn_a.csv, syn_b.csv and analysis.conf into `dir` (created if
/// missing). Throws InputError(Io) on write failure.
void write_fixture(const std::string& dir, std::uint64_t seed = kDefaultSeed);

}  // namespace effitest::fixture
