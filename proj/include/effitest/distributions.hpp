#pragma once

namespace effitest::stats {

/// Standard normal CDF.
[[nodiscard]] double normal_cdf(double x);

/// Standard normal upper tail 1 - Phi(x), accurate in the far tail.
[[nodiscard]] double normal_sf(double x);

/// Inverse standard normal CDF. Rational approximation polished with one
/// Halley step against erfc; throws StatError(Domain) outside (0, 1).
[[nodiscard]] double normal_icdf(double p);

/// Upper-tail probability of the chi-square distribution with `df` degrees of freedom.
[[nodiscard]] double chi2_sf(double x, int df);

/// Two-sided normal p-value 2 * (1 - Phi(|z|)).
[[nodiscard]] double two_sided_normal_p(double z);

}  // namespace effitest::stats
