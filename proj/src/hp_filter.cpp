#include "effitest/hp_filter.hpp"

#include <array>
#include <cmath>

#include "effitest/errors.hpp"

namespace effitest::hp {

namespace {

// Symmetric pentadiagonal matrix stored by diagonals.
struct Band {
    std::vector<double> d0, d1, d2;
};

Band hp_system(std::size_t n, double lambda) {
    Band a{std::vector<double>(n, 1.0), std::vector<double>(n - 1, 0.0), std::vector<double>(n - 2, 0.0)};
    constexpr std::array<double, 3> row{1.0, -2.0, 1.0};
    for (std::size_t r = 0; r + 2 < n; ++r) {
        for (std::size_t i = 0; i < 3; ++i) {
            a.d0[r + i] += lambda * row[i] * row[i];
            if (i + 1 < 3) a.d1[r + i] += lambda * row[i] * row[i + 1];
        }
        a.d2[r] += lambda * row[0] * row[2];
    }
    return a;
}

void multiply(const Band& a, std::span<const double> x, std::vector<double>& out) {
    const std::size_t n = x.size();
    out.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = a.d0[i] * x[i];
        if (i >= 1) s += a.d1[i - 1] * x[i - 1];
        if (i + 1 < n) s += a.d1[i] * x[i + 1];
        if (i >= 2) s += a.d2[i - 2] * x[i - 2];
        if (i + 2 < n) s += a.d2[i] * x[i + 2];
        out[i] = s;
    }
}

// A = L D L' with unit lower-triangular L of bandwidth 2.
struct Ldl {
    std::vector<double> d, l1, l2;

    explicit Ldl(const Band& a) {
        const std::size_t n = a.d0.size();
        d.resize(n);
        l1.assign(n, 0.0);  // l1[i] = L(i, i-1)
        l2.assign(n, 0.0);  // l2[i] = L(i, i-2)
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= 2) l2[i] = a.d2[i - 2] / d[i - 2];
            if (i >= 1) {
                double v = a.d1[i - 1];
                if (i >= 2) v -= l2[i] * l1[i - 1] * d[i - 2];
                l1[i] = v / d[i - 1];
            }
            double di = a.d0[i];
            if (i >= 1) di -= l1[i] * l1[i] * d[i - 1];
            if (i >= 2) di -= l2[i] * l2[i] * d[i - 2];
            if (!(di > 0.0)) throw StatError(StatErrorKind::SingularDesign, "hp_filter: system not positive definite");
            d[i] = di;
        }
    }

    void solve(std::vector<double>& x) const {
        const std::size_t n = x.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= 1) x[i] -= l1[i] * x[i - 1];
            if (i >= 2) x[i] -= l2[i] * x[i - 2];
        }
        for (std::size_t i = 0; i < n; ++i) x[i] /= d[i];
        for (std::size_t i = n; i-- > 0;) {
            if (i + 1 < n) x[i] -= l1[i + 1] * x[i + 1];
            if (i + 2 < n) x[i] -= l2[i + 2] * x[i + 2];
        }
    }
};

}  // namespace

double hp_penalty(std::span<const double> trend) {
    double s = 0.0;
    for (std::size_t t = 1; t + 1 < trend.size(); ++t) {
        const double dd = (trend[t + 1] - trend[t]) - (trend[t] - trend[t - 1]);
        s += dd * dd;
    }
    return s;
}

double hp_objective(std::span<const double> y, std::span<const double> trend, double lambda) {
    double fit = 0.0;
    for (std::size_t t = 0; t < y.size(); ++t) fit += (y[t] - trend[t]) * (y[t] - trend[t]);
    return fit + lambda * hp_penalty(trend);
}

HpDecomposition hp_filter(std::span<const double> y, double lambda) {
    const std::size_t n = y.size();
    if (n < 4) throw StatError(StatErrorKind::InsufficientData, "hp_filter: need at least 4 observations");
    for (double v : y) {
        if (!std::isfinite(v)) throw InputError(InputErrorKind::InvalidInput, "hp_filter: non-finite input");
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw InputError(InputErrorKind::InvalidInput, "hp_filter: lambda must be a finite non-negative number");
    }

    HpDecomposition out;
    out.lambda = lambda;
    if (lambda == 0.0) {
        out.trend.assign(y.begin(), y.end());
    } else {
        // Solve A c = lambda D'D y for the cycle: D y vanishes on linear input, so the
        // trend y - c stays exact there even when A is badly conditioned.
        const Band a = hp_system(n, lambda);
        const Ldl ldl(a);
        std::vector<double> dy(n - 2), rhs(n, 0.0);
        for (std::size_t t = 0; t + 2 < n; ++t) dy[t] = (y[t + 2] - y[t + 1]) - (y[t + 1] - y[t]);
        for (std::size_t t = 0; t + 2 < n; ++t) {
            rhs[t] += lambda * dy[t];
            rhs[t + 1] -= 2.0 * lambda * dy[t];
            rhs[t + 2] += lambda * dy[t];
        }
        std::vector<double> c = rhs, ac, corr(n);
        ldl.solve(c);
        for (int iter = 0; iter < 2; ++iter) {
            multiply(a, c, ac);
            for (std::size_t i = 0; i < n; ++i) corr[i] = rhs[i] - ac[i];
            ldl.solve(corr);
            for (std::size_t i = 0; i < n; ++i) c[i] += corr[i];
        }
        out.trend.resize(n);
        for (std::size_t i = 0; i < n; ++i) out.trend[i] = y[i] - c[i];
    }
    out.cycle.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.cycle[i] = y[i] - out.trend[i];
    out.objective_value = hp_objective(y, out.trend, lambda);
    return out;
}

std::optional<Frequency> parse_frequency(std::string_view text) {
    if (text == "daily") return Frequency::Daily;
    if (text == "monthly") return Frequency::Monthly;
    if (text == "quarterly") return Frequency::Quarterly;
    if (text == "annual") return Frequency::Annual;
    return std::nullopt;
}

double default_lambda(Frequency frequency) {
    double pv = 365.0;
    switch (frequency) {
        case Frequency::Daily: pv = 365.0; break;
        case Frequency::Monthly: pv = 12.0; break;
        case Frequency::Quarterly: pv = 4.0; break;
        case Frequency::Annual: pv = 1.0; break;
    }
    return 100.0 * pv * pv;
}

}  // namespace effitest::hp
