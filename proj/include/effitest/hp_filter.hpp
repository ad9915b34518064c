#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace effitest::hp {

/// y = trend + cycle.
struct HpDecomposition {
    std::vector<double> trend;
    std::vector<double> cycle;
    double lambda = 0.0;
    double objective_value = 0.0;
};

/// Exact Hodrick-Prescott trend: solves (I + lambda D'D) trend = y with a
/// banded LDL' factorization in O(n). lambda == 0 returns y unchanged.
HpDecomposition hp_filter(std::span<const double> y, double lambda);

/// sum (y - trend)^2 + lambda * sum (second differences of trend)^2
double hp_objective(std::span<const double> y, std::span<const double> trend, double lambda);

/// sum of squared second differences.
double hp_penalty(std::span<const double> trend);

enum class Frequency { Daily, Monthly, Quarterly, Annual };

std::optional<Frequency> parse_frequency(std::string_view text);

/// 100 * PV^2 with PV = 365, 12, 4, 1.
double default_lambda(Frequency frequency);

}  // namespace effitest::hp
