#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "effitest/unitroot.hpp"

namespace effitest::sim {

/// Portable normal stream: std::mt19937_64 (output fully specified by the
/// standard), 53-bit uniforms on the open interval (0, 1), and inverse-CDF
/// normals via stats::normal_icdf. Identical seeds give bit-identical draws on
/// every conforming platform.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }
    double normal();

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer applied to base + golden-ratio * (index + 1).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

enum class GeneratorKind { RandomWalk, Ar1, IidGaussian };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::IidGaussian;
    std::size_t n = 500;
    double drift = 0.0;  ///< random walk step drift; mean for iid draws; intercept for AR(1)
    double phi = 0.0;
    double sigma = 1.0;
    std::uint64_t seed = 1;

    void validate() const;
};

inline constexpr std::size_t kAr1BurnIn = 100;

/// random_walk: X_0 = 0, X_t = drift + X_{t-1} + sigma * e_t (n levels).
/// iid_gaussian: drift + sigma * e_t.
/// ar1: y_t = drift + phi * y_{t-1} + sigma * e_t from y_0 = 0, first 100 discarded.
std::vector<double> generate(const GeneratorSpec& spec);

enum class TestKind { RunsMean, RunsZero, JarqueBera, LjungBox, Adf };

struct TestSpec {
    TestKind kind = TestKind::RunsMean;
    std::size_t lb_horizon = 10;
    unitroot::AdfModel adf_model = unitroot::AdfModel::Drift;
    int adf_lags = -1;  ///< -1 selects default_lag(n)

    /// Parses `runs`, `runs_zero`, `jb`, `ljung_box[:h]`, `adf[:model[:lags]]`.
    /// Unknown identifiers raise ConfigError.
    static TestSpec parse(std::string_view text);
    [[nodiscard]] std::string name() const;
};

/// p-value of `test` on one sample.
double run_test(const TestSpec& test, std::span<const double> sample);

struct SizePowerResult {
    std::string test_name;
    GeneratorSpec generator;
    std::size_t trials = 0;
    double alpha = 0.05;
    std::size_t rejections = 0;
    double rejection_rate = 0.0;
    double ci_halfwidth = 0.0;  ///< 1.96 * sqrt(r (1 - r) / trials)
};

/// Trial i draws from `spec` with seed derive_seed(spec.seed, i). Trials run in
/// parallel; the outcome is independent of thread count and scheduling.
SizePowerResult size_power(const TestSpec& test, const GeneratorSpec& spec, std::size_t trials, double alpha);
SizePowerResult size_power_serial(const TestSpec& test, const GeneratorSpec& spec, std::size_t trials,
                                  double alpha);

/// ADF tau for `reps` driftless random walks of length n (seeded like size_power).
std::vector<double> simulate_adf_null(unitroot::AdfModel model, std::size_t n, std::size_t lags, std::size_t reps,
                                      std::uint64_t seed);
std::vector<double> simulate_adf_null_serial(unitroot::AdfModel model, std::size_t n, std::size_t lags,
                                             std::size_t reps, std::uint64_t seed);

/// The fixed Monte-Carlo validation battery (sizes and powers).
struct BatteryEntry {
    std::string label;
    SizePowerResult result;
    double lower = 0.0;  ///< acceptance band for the rejection rate
    double upper = 1.0;
    [[nodiscard]] bool pass() const { return result.rejection_rate >= lower && result.rejection_rate <= upper; }
};

std::vector<BatteryEntry> validation_battery(std::uint64_t seed);

}  // namespace effitest::sim
