#include "effitest/simulation.hpp"

#include <cmath>

#include "effitest/descriptive.hpp"
#include "effitest/distributions.hpp"
#include "effitest/errors.hpp"
#include "effitest/randomness.hpp"

namespace effitest::sim {

double NormalStream::normal() { return stats::normal_icdf(uniform()); }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void GeneratorSpec::validate() const {
    if (n < 10) throw ConfigError("generator: n must be at least 10");
    if (!(sigma > 0.0)) throw ConfigError("generator: sigma must be positive");
    if (kind == GeneratorKind::Ar1 && !(std::fabs(phi) < 1.0)) throw ConfigError("generator: AR(1) needs |phi| < 1");
}

std::vector<double> generate(const GeneratorSpec& spec) {
    spec.validate();
    NormalStream rng(spec.seed);
    std::vector<double> out(spec.n);
    switch (spec.kind) {
        case GeneratorKind::RandomWalk: {
            double x = 0.0;
            out[0] = x;
            for (std::size_t t = 1; t < spec.n; ++t) {
                x = spec.drift + x + spec.sigma * rng.normal();
                out[t] = x;
            }
            break;
        }
        case GeneratorKind::IidGaussian:
            for (auto& v : out) v = spec.drift + spec.sigma * rng.normal();
            break;
        case GeneratorKind::Ar1: {
            double y = 0.0;
            for (std::size_t t = 0; t < kAr1BurnIn; ++t) y = spec.drift + spec.phi * y + spec.sigma * rng.normal();
            for (auto& v : out) {
                y = spec.drift + spec.phi * y + spec.sigma * rng.normal();
                v = y;
            }
            break;
        }
    }
    return out;
}

TestSpec TestSpec::parse(std::string_view text) {
    std::vector<std::string_view> parts;
    for (std::size_t pos = 0;;) {
        const auto c = text.find(':', pos);
        parts.push_back(text.substr(pos, c == std::string_view::npos ? std::string_view::npos : c - pos));
        if (c == std::string_view::npos) break;
        pos = c + 1;
    }
    TestSpec t;
    const auto head = parts[0];
    auto parse_count = [&](std::string_view s) -> long {
        try {
            std::size_t used = 0;
            const long v = std::stol(std::string(s), &used);
            if (used != s.size()) throw ConfigError("");
            return v;
        } catch (...) {
            throw ConfigError("test spec '" + std::string(text) + "': bad number '" + std::string(s) + "'");
        }
    };
    if (head == "runs" || head == "runs_mean") {
        t.kind = TestKind::RunsMean;
    } else if (head == "runs_zero") {
        t.kind = TestKind::RunsZero;
    } else if (head == "jb" || head == "jarque_bera") {
        t.kind = TestKind::JarqueBera;
    } else if (head == "ljung_box") {
        t.kind = TestKind::LjungBox;
        if (parts.size() > 1) {
            const long h = parse_count(parts[1]);
            if (h < 1) throw ConfigError("test spec '" + std::string(text) + "': horizon must be >= 1");
            t.lb_horizon = static_cast<std::size_t>(h);
        }
    } else if (head == "adf") {
        t.kind = TestKind::Adf;
        if (parts.size() > 1) {
            const auto m = unitroot::parse_adf_model(parts[1]);
            if (!m) throw ConfigError("test spec '" + std::string(text) + "': unknown ADF model");
            t.adf_model = *m;
        }
        if (parts.size() > 2) t.adf_lags = static_cast<int>(parse_count(parts[2]));
    } else {
        throw ConfigError("unknown test identifier '" + std::string(text) + "'");
    }
    return t;
}

std::string TestSpec::name() const {
    switch (kind) {
        case TestKind::RunsMean: return "runs_mean";
        case TestKind::RunsZero: return "runs_zero";
        case TestKind::JarqueBera: return "jarque_bera";
        case TestKind::LjungBox: return "ljung_box(h=" + std::to_string(lb_horizon) + ")";
        case TestKind::Adf: return "adf(" + unitroot::to_string(adf_model) + ")";
    }
    return "unknown";
}

double run_test(const TestSpec& test, std::span<const double> sample) {
    switch (test.kind) {
        case TestKind::RunsMean: return randomness::runs_test(sample, randomness::RunsReference::Mean).p_value;
        case TestKind::RunsZero: return randomness::runs_test(sample, randomness::RunsReference::Zero).p_value;
        case TestKind::JarqueBera: return stats::jarque_bera(stats::describe(sample)).p_value;
        case TestKind::LjungBox: {
            const auto rho = randomness::autocorrelations_serial(sample, test.lb_horizon);
            return randomness::ljung_box(randomness::acf_from_rho(rho, sample.size(), randomness::AcfMode::Appendix),
                                         sample.size(), test.lb_horizon)
                .p_value;
        }
        case TestKind::Adf: {
            const std::size_t lags =
                test.adf_lags < 0 ? unitroot::default_lag(sample.size()) : static_cast<std::size_t>(test.adf_lags);
            return unitroot::adf_test(sample, lags, test.adf_model).p_value;
        }
    }
    throw ConfigError("unknown test kind");
}

namespace {

GeneratorSpec trial_spec(const GeneratorSpec& spec, std::size_t trial) {
    GeneratorSpec s = spec;
    s.seed = derive_seed(spec.seed, trial);
    return s;
}

SizePowerResult summarize(const TestSpec& test, const GeneratorSpec& spec, std::size_t trials, double alpha,
                          const std::vector<unsigned char>& rejected) {
    SizePowerResult r;
    r.test_name = test.name();
    r.generator = spec;
    r.trials = trials;
    r.alpha = alpha;
    for (unsigned char x : rejected) r.rejections += x;
    r.rejection_rate = static_cast<double>(r.rejections) / static_cast<double>(trials);
    r.ci_halfwidth = 1.96 * std::sqrt(r.rejection_rate * (1.0 - r.rejection_rate) / static_cast<double>(trials));
    return r;
}

void check_harness_args(const GeneratorSpec& spec, std::size_t trials, double alpha) {
    spec.validate();
    if (trials < 100) throw ConfigError("size_power: need at least 100 trials");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("size_power: alpha must lie in (0, 1)");
}

}  // namespace

SizePowerResult size_power(const TestSpec& test, const GeneratorSpec& spec, std::size_t trials, double alpha) {
    check_harness_args(spec, trials, alpha);
    std::vector<unsigned char> rejected(trials, 0);
    const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto sample = generate(trial_spec(spec, static_cast<std::size_t>(i)));
        rejected[i] = run_test(test, sample) < alpha ? 1 : 0;
    }
    return summarize(test, spec, trials, alpha, rejected);
}

SizePowerResult size_power_serial(const TestSpec& test, const GeneratorSpec& spec, std::size_t trials,
                                  double alpha) {
    check_harness_args(spec, trials, alpha);
    std::vector<unsigned char> rejected(trials, 0);
    for (std::size_t i = 0; i < trials; ++i) {
        const auto sample = generate(trial_spec(spec, i));
        rejected[i] = run_test(test, sample) < alpha ? 1 : 0;
    }
    return summarize(test, spec, trials, alpha, rejected);
}

namespace {

GeneratorSpec walk_spec(std::size_t n, std::uint64_t seed, std::size_t rep) {
    GeneratorSpec s;
    s.kind = GeneratorKind::RandomWalk;
    s.n = n;
    s.seed = derive_seed(seed, rep);
    return s;
}

}  // namespace

std::vector<double> simulate_adf_null(unitroot::AdfModel model, std::size_t n, std::size_t lags, std::size_t reps,
                                      std::uint64_t seed) {
    std::vector<double> taus(reps);
    const auto count = static_cast<std::ptrdiff_t>(reps);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto walk = generate(walk_spec(n, seed, static_cast<std::size_t>(i)));
        taus[i] = unitroot::adf_test(walk, lags, model).tau;
    }
    return taus;
}

std::vector<double> simulate_adf_null_serial(unitroot::AdfModel model, std::size_t n, std::size_t lags,
                                             std::size_t reps, std::uint64_t seed) {
    std::vector<double> taus(reps);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto walk = generate(walk_spec(n, seed, i));
        taus[i] = unitroot::adf_test(walk, lags, model).tau;
    }
    return taus;
}

std::vector<BatteryEntry> validation_battery(std::uint64_t seed) {
    auto gen = [&](GeneratorKind kind, std::size_t n, double phi, std::uint64_t salt) {
        GeneratorSpec g;
        g.kind = kind;
        g.n = n;
        g.phi = phi;
        g.seed = derive_seed(seed, salt);
        return g;
    };
    std::vector<BatteryEntry> out;
    auto add = [&](std::string label, const char* test, GeneratorSpec g, std::size_t trials, double lo, double hi) {
        out.push_back({std::move(label), size_power(TestSpec::parse(test), g, trials, 0.05), lo, hi});
    };
    add("size: runs test, iid N(0,1), n=500", "runs", gen(GeneratorKind::IidGaussian, 500, 0.0, 1), 2000, 0.03, 0.07);
    add("size: Jarque-Bera, iid N(0,1), n=500", "jb", gen(GeneratorKind::IidGaussian, 500, 0.0, 2), 2000, 0.03, 0.08);
    add("size: Ljung-Box h=10, iid N(0,1), n=500", "ljung_box:10", gen(GeneratorKind::IidGaussian, 500, 0.0, 3), 2000,
        0.03, 0.08);
    add("size: ADF drift, random walk, n=1000", "adf:drift", gen(GeneratorKind::RandomWalk, 1000, 0.0, 4), 1000, 0.0,
        0.10);
    add("power: Ljung-Box h=10, AR(1) phi=0.3, n=500", "ljung_box:10", gen(GeneratorKind::Ar1, 500, 0.3, 5), 1000,
        0.95, 1.0);
    return out;
}

}  // namespace effitest::sim
