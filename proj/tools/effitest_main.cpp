#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "effitest/config.hpp"
#include "effitest/errors.hpp"
#include "effitest/fixture.hpp"
#include "effitest/plots.hpp"
#include "effitest/render.hpp"
#include "effitest/report.hpp"
#include "effitest/simulation.hpp"

namespace fs = std::filesystem;
using namespace effitest;

namespace {

struct AnalyzeFlags {
    std::string config_path, config_path_flag;
    std::vector<std::string> inputs, index_names, date_cols, price_cols;
    std::string scheme, acf_mode, adf_model, adf_target, hp_lambda, formats, plots, out, seed;
};

void write_out(const fs::path& root, const RenderedFile& f) {
    const fs::path path = root / f.filename;
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw InputError(InputErrorKind::Io, "cannot create '" + path.parent_path().string() + "': " + ec.message());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(InputErrorKind::Io, "cannot write '" + path.string() + "'");
    out << f.content;
    if (!out) throw InputError(InputErrorKind::Io, "write failed for '" + path.string() + "'");
}

AnalysisConfig build_config(const AnalyzeFlags& f) {
    const std::string path = f.config_path_flag.empty() ? f.config_path : f.config_path_flag;
    AnalysisConfig config = path.empty() ? AnalysisConfig{} : load_config(path);
    auto set = [&](const char* key, const std::string& v) {
        if (!v.empty()) apply_setting(config, std::nullopt, key, v);
    };
    set("scheme", f.scheme);
    set("acf_mode", f.acf_mode);
    set("adf_model", f.adf_model);
    set("adf_target", f.adf_target);
    set("hp_lambda", f.hp_lambda);
    set("formats", f.formats);
    set("plots", f.plots);
    set("out", f.out);
    set("seed", f.seed);
    // Per-input flags map by position onto [input.1], [input.2].
    auto per_input = [&](const std::vector<std::string>& values, const char* key) {
        for (std::size_t i = 0; i < values.size(); ++i) apply_setting(config, i, key, values[i]);
    };
    per_input(f.inputs, "path");
    per_input(f.index_names, "index_name");
    per_input(f.date_cols, "date_col");
    per_input(f.price_cols, "price_col");
    for (auto& in : config.inputs) {
        if (in.index_name.empty() && !in.path.empty()) in.index_name = fs::path(in.path).stem().string();
    }
    if (config.output_dir.empty()) {
        const char* env = std::getenv("EFFITEST_OUT");
        config.output_dir = env && *env ? env : "effitest_out";
    }
    return config;
}

int analyze(const AnalyzeFlags& flags) {
    const auto config = build_config(flags);
    config.validate();
    const auto output = run_analysis(config);
    const fs::path root(config.output_dir);
    std::size_t written = 0;
    for (const auto format : config.formats) {
        for (const auto& f : render(output.report, format)) {
            write_out(root, f);
            ++written;
        }
    }
    if (config.plots) {
        for (const auto& f : plots::render_plots(output, config)) {
            write_out(root, f);
            ++written;
        }
    }
    std::cout << "wrote " << written << " files to " << root.string() << '\n';
    for (const auto& w : output.report.warnings) std::cerr << "warning: " << w << '\n';
    return 0;
}

int validate_mc(std::uint64_t seed) {
    const auto battery = sim::validation_battery(seed);
    bool ok = true;
    for (const auto& e : battery) {
        std::printf("%-40s rate=%.4f  +/-%.4f  band=[%.2f, %.2f]  %s\n", e.label.c_str(), e.result.rejection_rate,
                    e.result.ci_halfwidth, e.lower, e.upper, e.pass() ? "pass" : "FAIL");
        ok = ok && e.pass();
    }
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak-form market efficiency test battery"};
    app.require_subcommand(1);

    AnalyzeFlags flags;
    auto* an = app.add_subcommand("analyze", "Run the full battery on one or two index CSV files");
    an->add_option("config-path", flags.config_path, "Config file (key = value with [input.N] sections)");
    an->add_option("--config", flags.config_path_flag, "Config file (same as the positional argument)");
    an->add_option("--input", flags.inputs, "Input CSV path (repeat for a second market)");
    an->add_option("--index-name", flags.index_names, "Index name per input");
    an->add_option("--date-col", flags.date_cols, "Date column per input");
    an->add_option("--price-col", flags.price_cols, "Price column per input");
    an->add_option("--scheme", flags.scheme, "default or label:start:end,...");
    an->add_option("--acf-mode", flags.acf_mode, "appendix|paper_table");
    an->add_option("--adf-model", flags.adf_model, "none|drift|drift_trend");
    an->add_option("--adf-target", flags.adf_target, "returns|log_prices");
    an->add_option("--hp-lambda", flags.hp_lambda, "Number or daily|monthly|quarterly|annual");
    an->add_option("--formats", flags.formats, "Comma list of markdown,csv,json");
    an->add_option("--plots", flags.plots, "true|false");
    an->add_option("--out", flags.out, "Output directory (fallback: $EFFITEST_OUT)");
    an->add_option("--seed", flags.seed, "Seed for Monte-Carlo validation");

    std::uint64_t mc_seed = fixture::kDefaultSeed;
    auto* mc = app.add_subcommand("validate-mc", "Run the Monte-Carlo size/power battery");
    mc->add_option("--seed", mc_seed, "Base seed");

    std::uint64_t fx_seed = fixture::kDefaultSeed;
    std::string fx_out = "data/fixture";
    auto* fx = app.add_subcommand("fixture", "Regenerate the bundled synthetic dataset");
    fx->add_option("--out", fx_out, "Target directory");
    fx->add_option("--seed", fx_seed, "Base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*an) return analyze(flags);
        if (*mc) return validate_mc(mc_seed);
        if (*fx) {
            fixture::write_fixture(fx_out, fx_seed);
            std::cout << "wrote fixture to " << fx_out << '\n';
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const StatError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
