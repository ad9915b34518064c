#include "effitest/fixture.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "effitest/errors.hpp"
#include "effitest/series.hpp"
#include "effitest/simulation.hpp"

namespace effitest::fixture {

namespace {

struct Regime {
    TradingDate until;
    double sigma;
    double drift;
};

// Volatility regimes: calm run-up, crisis, recovery, late turbulence.
const std::vector<Regime>& regimes() {
    static const std::vector<Regime> r{
        {TradingDate(2007, 11, 30), 0.014, 0.0004},
        {TradingDate(2009, 6, 30), 0.028, -0.0006},
        {TradingDate(2015, 5, 31), 0.012, 0.0003},
        {TradingDate(2016, 4, 8), 0.022, -0.0002},
    };
    return r;
}

const Regime& regime_for(const TradingDate& d) {
    for (const auto& r : regimes()) {
        if (d <= r.until) return r;
    }
    return regimes().back();
}

std::string money(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(InputErrorKind::Io, "cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw InputError(InputErrorKind::Io, "write failed for '" + path.string() + "'");
}

}  // namespace

FixtureData make_fixture(std::uint64_t seed) {
    sim::NormalStream common(sim::derive_seed(seed, 0));
    sim::NormalStream own_a(sim::derive_seed(seed, 1));
    sim::NormalStream own_b(sim::derive_seed(seed, 2));
    sim::NormalStream holidays(sim::derive_seed(seed, 3));
    sim::NormalStream intraday(sim::derive_seed(seed, 4));

    FixtureData f;
    f.syn_a_csv = "Date,Close\n";
    f.syn_b_csv = "Date,Open,High,Low,Close,Adj Close,Volume\n";

    double pa = 1000.0, pb = 150.0;
    const auto first = TradingDate(1996, 1, 1).serial();
    const auto last = TradingDate(2016, 4, 8).serial();
    for (auto s = first; s <= last; ++s) {
        const auto d = TradingDate::from_serial(s);
        if (d.weekday() >= 5) continue;
        // Every draw happens each weekday so both calendars consume the same stream positions.
        const double z = common.normal();
        const double ea = own_a.normal(), eb = own_b.normal();
        const double ua = holidays.uniform(), ub = holidays.uniform();
        const double shock = holidays.uniform();
        const double o = intraday.uniform(), h = intraday.uniform(), l = intraday.uniform();
        const double vol = intraday.uniform();

        if ((d.month() == 1 && d.day() == 1) || (d.month() == 12 && d.day() == 25)) continue;

        const auto& reg = regime_for(d);
        const double tail = shock < 0.01 ? 4.0 : 1.0;
        const double ra = std::max(-0.5, reg.drift + reg.sigma * tail * (0.75 * z + 0.6614378277661477 * ea));
        const double rb = std::max(-0.5, reg.drift + 1.2 * reg.sigma * tail * (0.75 * z + 0.6614378277661477 * eb));
        pa *= 1.0 + ra;
        pb *= 1.0 + rb;

        if (ua >= 0.03) f.syn_a_csv += d.iso() + ',' + money(pa) + '\n';
        if (ub >= 0.03) {
            const double open = pb / (1.0 + rb * (0.2 + 0.6 * o));
            const double high = std::max(open, pb) * (1.0 + 0.01 * h);
            const double low = std::min(open, pb) * (1.0 - 0.01 * l);
            char volume[32];
            std::snprintf(volume, sizeof volume, "%.0f", 1e6 + 4e6 * vol);
            f.syn_b_csv += d.iso() + ',' + money(open) + ',' + money(high) + ',' + money(low) + ',' + money(pb) + ',' +
                           money(pb) + ',' + volume + '\n';
        }
    }

    char seed_buf[32];
    std::snprintf(seed_buf, sizeof seed_buf, "%llu", static_cast<unsigned long long>(seed));
    f.config =
        "# Synthetic two-market fixture. Regenerate with: effitest fixture --out <dir>\n"
        "scheme = default\n"
        "acf_mode = paper_table\n"
        "adf_model = drift_trend\n"
        "adf_target = returns\n"
        "hp_lambda = daily\n"
        "max_lag = 20\n"
        "lb_horizon = 20\n"
        "formats = markdown,csv,json\n"
        "plots = true\n"
        "mc_validate = false\n"
        "seed = " + std::string(seed_buf) + "\n"
        "\n"
        "[input.1]\n"
        "path = syn_a.csv\n"
        "index_name = SYN-A\n"
        "\n"
        "[input.2]\n"
        "path = syn_b.csv\n"
        "index_name = SYN-B\n"
        "price_col = Adj Close\n";
    return f;
}

void write_fixture(const std::string& dir, std::uint64_t seed) {
    const auto f = make_fixture(seed);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw InputError(InputErrorKind::Io, "cannot create '" + dir + "': " + ec.message());
    write_file(std::filesystem::path(dir) / "syn_a.csv", f.syn_a_csv);
    write_file(std::filesystem::path(dir) / "syn_b.csv", f.syn_b_csv);
    write_file(std::filesystem::path(dir) / "analysis.conf", f.config);
}

}  // namespace effitest::fixture
