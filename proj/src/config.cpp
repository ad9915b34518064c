#include "effitest/config.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "effitest/errors.hpp"
#include "effitest/hp_filter.hpp"

namespace effitest {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool parse_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
    if (v == "false" || v == "no" || v == "0" || v == "off") return false;
    throw ConfigError("setting '" + std::string(key) + "': expected a boolean, got '" + std::string(v) + "'");
}

std::uint64_t parse_u64(std::string_view key, std::string_view v) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("setting '" + std::string(key) + "': expected a non-negative integer, got '" +
                          std::string(v) + "'");
    }
    return out;
}

double parse_lambda(std::string_view v) {
    if (const auto f = hp::parse_frequency(v)) return hp::default_lambda(*f);
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out) || out < 0.0) {
        throw ConfigError("hp_lambda: expected a non-negative number or daily|monthly|quarterly|annual, got '" +
                          std::string(v) + "'");
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
    if (text == "markdown" || text == "md") return OutputFormat::Markdown;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::Markdown: return "markdown";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
    }
    return "markdown";
}

void AnalysisConfig::validate() const {
    if (inputs.empty()) throw ConfigError("no input series configured");
    if (inputs.size() > 2) throw ConfigError("at most two input series are supported");
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].path.empty()) throw ConfigError("input " + std::to_string(i + 1) + " has no path");
        if (inputs[i].index_name.empty()) throw ConfigError("input " + std::to_string(i + 1) + " has no index_name");
        inputs[i].schema.validate();
    }
    if (inputs.size() == 2 && inputs[0].index_name == inputs[1].index_name) {
        throw ConfigError("the two inputs need distinct index names");
    }
    if (max_lag < 2) throw ConfigError("max_lag must be at least 2");
    if (lb_horizon < 1 || lb_horizon > max_lag) throw ConfigError("lb_horizon must lie in [1, max_lag]");
    if (!(hp_lambda >= 0.0)) throw ConfigError("hp_lambda must be non-negative");
}

void apply_setting(AnalysisConfig& config, std::optional<std::size_t> section, std::string_view key,
                   std::string_view value) {
    if (section) {
        if (config.inputs.size() <= *section) config.inputs.resize(*section + 1);
        InputSpec& in = config.inputs[*section];
        if (key == "path") {
            in.path = value;
        } else if (key == "index_name") {
            in.index_name = value;
        } else if (key == "date_col") {
            in.schema.date_column = value;
        } else if (key == "price_col") {
            in.schema.price_column = value;
        } else if (key == "date_format") {
            const auto f = ingest::parse_date_format(value);
            if (!f) throw ConfigError("date_format: unknown pattern '" + std::string(value) + "'");
            in.schema.date_format = *f;
        } else if (key == "decimal") {
            if (value.size() != 1) throw ConfigError("decimal: expected a single character");
            in.schema.decimal_separator = value[0];
        } else {
            throw ConfigError("unknown input setting '" + std::string(key) + "'");
        }
        return;
    }

    if (key == "scheme") {
        config.scheme = PeriodScheme::parse(value);
    } else if (key == "acf_mode") {
        if (value == "appendix") {
            config.acf_mode = randomness::AcfMode::Appendix;
        } else if (value == "paper_table") {
            config.acf_mode = randomness::AcfMode::PaperTable;
        } else {
            throw ConfigError("acf_mode: expected appendix|paper_table, got '" + std::string(value) + "'");
        }
    } else if (key == "adf_model") {
        const auto m = unitroot::parse_adf_model(value);
        if (!m) throw ConfigError("adf_model: expected none|drift|drift_trend, got '" + std::string(value) + "'");
        config.adf_model = *m;
    } else if (key == "adf_target") {
        const auto t = unitroot::parse_adf_target(value);
        if (!t) throw ConfigError("adf_target: expected returns|log_prices, got '" + std::string(value) + "'");
        config.adf_target = *t;
    } else if (key == "hp_lambda") {
        config.hp_lambda = parse_lambda(value);
    } else if (key == "max_lag") {
        config.max_lag = parse_u64(key, value);
    } else if (key == "lb_horizon") {
        config.lb_horizon = parse_u64(key, value);
    } else if (key == "out" || key == "output_dir") {
        config.output_dir = value;
    } else if (key == "formats") {
        config.formats.clear();
        std::size_t pos = 0;
        while (pos <= value.size()) {
            auto c = value.find(',', pos);
            if (c == std::string_view::npos) c = value.size();
            const auto item = trim(value.substr(pos, c - pos));
            const auto f = parse_output_format(item);
            if (!f) throw ConfigError("formats: unknown format '" + std::string(item) + "'");
            config.formats.push_back(*f);
            pos = c + 1;
        }
    } else if (key == "plots") {
        config.plots = parse_bool(key, value);
    } else if (key == "mc_validate") {
        config.mc_validate = parse_bool(key, value);
    } else if (key == "seed") {
        config.seed = parse_u64(key, value);
    } else {
        throw ConfigError("unknown setting '" + std::string(key) + "'");
    }
}

AnalysisConfig parse_config(std::string_view text, const std::string& base_dir) {
    AnalysisConfig config;
    std::optional<std::size_t> section;
    std::size_t line_no = 0;
    for (std::size_t pos = 0; pos < text.size();) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": unterminated section");
            const auto name = line.substr(1, line.size() - 2);
            if (name.substr(0, 6) != "input.") {
                throw ConfigError("line " + std::to_string(line_no) + ": unknown section '" + std::string(name) + "'");
            }
            const auto idx = parse_u64("section", name.substr(6));
            if (idx < 1 || idx > 2) throw ConfigError("line " + std::to_string(line_no) + ": input index must be 1 or 2");
            section = idx - 1;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        try {
            apply_setting(config, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!base_dir.empty()) {
        for (auto& in : config.inputs) {
            if (!in.path.empty() && std::filesystem::path(in.path).is_relative()) {
                in.path = (std::filesystem::path(base_dir) / in.path).lexically_normal().string();
            }
        }
    }
    return config;
}

AnalysisConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::filesystem::path(path).parent_path().string());
}

std::string write_config(const AnalysisConfig& config) {
    std::ostringstream out;
    out << "scheme = " << config.scheme.to_string() << '\n';
    out << "acf_mode = " << (config.acf_mode == randomness::AcfMode::Appendix ? "appendix" : "paper_table") << '\n';
    out << "adf_model = " << unitroot::to_string(config.adf_model) << '\n';
    out << "adf_target = " << unitroot::to_string(config.adf_target) << '\n';
    out << "hp_lambda = " << format_double(config.hp_lambda) << '\n';
    out << "max_lag = " << config.max_lag << '\n';
    out << "lb_horizon = " << config.lb_horizon << '\n';
    if (!config.output_dir.empty()) out << "out = " << config.output_dir << '\n';
    out << "formats = ";
    for (std::size_t i = 0; i < config.formats.size(); ++i) out << (i ? "," : "") << to_string(config.formats[i]);
    out << '\n';
    out << "plots = " << (config.plots ? "true" : "false") << '\n';
    out << "mc_validate = " << (config.mc_validate ? "true" : "false") << '\n';
    out << "seed = " << config.seed << '\n';
    for (std::size_t i = 0; i < config.inputs.size(); ++i) {
        const auto& in = config.inputs[i];
        out << "\n[input." << i + 1 << "]\n";
        out << "path = " << in.path << '\n';
        out << "index_name = " << in.index_name << '\n';
        out << "date_col = " << in.schema.date_column << '\n';
        if (!in.schema.price_column.empty()) out << "price_col = " << in.schema.price_column << '\n';
        out << "date_format = " << ingest::to_string(in.schema.date_format) << '\n';
        out << "decimal = " << in.schema.decimal_separator << '\n';
    }
    return out.str();
}

}  // namespace effitest
