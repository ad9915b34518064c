#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "effitest/ingest.hpp"
#include "effitest/randomness.hpp"
#include "effitest/series.hpp"
#include "effitest/unitroot.hpp"

namespace effitest {

struct InputSpec {
    std::string path;
    ingest::CsvSchema schema;
    std::string index_name;
};

enum class OutputFormat { Markdown, Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view text);
std::string to_string(OutputFormat format);

struct AnalysisConfig {
    std::vector<InputSpec> inputs;
    PeriodScheme scheme = default_scheme();
    randomness::AcfMode acf_mode = randomness::AcfMode::PaperTable;
    unitroot::AdfModel adf_model = unitroot::AdfModel::DriftTrend;
    unitroot::AdfTarget adf_target = unitroot::AdfTarget::Returns;
    double hp_lambda = 100.0 * 365.0 * 365.0;
    std::size_t max_lag = 20;
    std::size_t lb_horizon = 20;
    std::string output_dir;
    std::vector<OutputFormat> formats{OutputFormat::Markdown, OutputFormat::Csv, OutputFormat::Json};
    bool plots = true;
    bool mc_validate = false;
    std::uint64_t seed = 20160408;

    /// Throws ConfigError when no input is given or a setting is inconsistent.
    void validate() const;
};

/// Applies one `key = value` setting. `section` is empty for global keys and
/// the input index for `[input.N]` sections. Throws ConfigError on unknown
/// keys or bad values.
void apply_setting(AnalysisConfig& config, std::optional<std::size_t> section, std::string_view key,
                   std::string_view value);

/// Parses the flat `key = value` format with `[input.N]` section headers and
/// `#` comments. Relative input paths are resolved against `base_dir`.
AnalysisConfig parse_config(std::string_view text, const std::string& base_dir = "");
AnalysisConfig load_config(const std::string& path);

/// Serializes a config back to the same format.
std::string write_config(const AnalysisConfig& config);

}  // namespace effitest
