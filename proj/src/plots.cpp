#include "effitest/plots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "effitest/distributions.hpp"
#include "effitest/errors.hpp"
#include "effitest/hp_filter.hpp"

namespace effitest::plots {

namespace {

constexpr double kW = 640, kH = 400, kLeft = 60, kRight = 20, kTop = 40, kBottom = 40;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

class Canvas {
public:
    Canvas(const std::string& title, double x0, double x1, double y0, double y1) : x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
        if (!(x1_ > x0_)) x1_ = x0_ + 1.0;
        if (!(y1_ > y0_)) {
            y0_ -= 0.5;
            y1_ = y0_ + 1.0;
        }
        body_ = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
        body_ += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
        body_ += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
                 escape(title) + "</text>\n";
        body_ += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(kW - kLeft - kRight) +
                 "\" height=\"" + fmt(kH - kTop - kBottom) + "\" fill=\"none\" stroke=\"#444\"/>\n";
        label(kLeft - 4, kH - kBottom, y0_, "end");
        label(kLeft - 4, kTop + 10, y1_, "end");
        label(kLeft, kH - kBottom + 14, x0_, "start");
        label(kW - kRight, kH - kBottom + 14, x1_, "end");
    }

    double px(double x) const { return kLeft + (x - x0_) / (x1_ - x0_) * (kW - kLeft - kRight); }
    double py(double y) const { return kH - kBottom - (y - y0_) / (y1_ - y0_) * (kH - kTop - kBottom); }

    void polyline(std::span<const double> xs, std::span<const double> ys, const char* color, double width = 1.0) {
        body_ += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"" + fmt(width) +
                 "\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) body_ += ' ';
            body_ += fmt(px(xs[i])) + ',' + fmt(py(ys[i]));
        }
        body_ += "\"/>\n";
    }

    void line(double xa, double ya, double xb, double yb, const char* color, const char* dash = nullptr) {
        body_ += "<line x1=\"" + fmt(px(xa)) + "\" y1=\"" + fmt(py(ya)) + "\" x2=\"" + fmt(px(xb)) + "\" y2=\"" +
                 fmt(py(yb)) + "\" stroke=\"" + color + "\"";
        if (dash) body_ += " stroke-dasharray=\"" + std::string(dash) + "\"";
        body_ += "/>\n";
    }

    void rect(double xa, double ya, double xb, double yb, const char* fill) {
        const double l = px(xa), r = px(xb), t = py(yb), b = py(ya);
        body_ += "<rect x=\"" + fmt(l) + "\" y=\"" + fmt(t) + "\" width=\"" + fmt(r - l) + "\" height=\"" +
                 fmt(b - t) + "\" fill=\"" + fill + "\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
    }

    void dot(double x, double y, const char* color) {
        body_ += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) + "\" r=\"1.5\" fill=\"" + color + "\"/>\n";
    }

    void note(const std::string& text) {
        body_ += "<text x=\"320\" y=\"200\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
                 escape(text) + "</text>\n";
    }

    std::string finish() { return body_ + "</svg>\n"; }

private:
    void label(double x, double y, double v, const char* anchor) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4g", v);
        body_ += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" text-anchor=\"" + anchor +
                 "\" font-family=\"sans-serif\" font-size=\"10\">" + buf + "</text>\n";
    }

    double x0_, x1_, y0_, y1_;
    std::string body_;
};

std::pair<double, double> range(std::span<const double> v) {
    if (v.empty()) return {0.0, 1.0};
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return {*lo, *hi};
}

std::vector<double> index_axis(std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<double>(i);
    return xs;
}

std::string series_plot(const std::string& title, std::span<const double> ys) {
    const auto xs = index_axis(ys.size());
    const auto [lo, hi] = range(ys);
    Canvas c(title, 0.0, std::max<double>(1.0, static_cast<double>(ys.size()) - 1.0), lo, hi);
    if (ys.empty()) c.note("no observations");
    c.polyline(xs, ys, "#1f4e9c");
    return c.finish();
}

std::string empty_plot(const std::string& title, const std::string& why) {
    Canvas c(title, 0.0, 1.0, 0.0, 1.0);
    c.note(why);
    return c.finish();
}

bool constant(std::span<const double> v) {
    return v.empty() || std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

std::string hist_plot(const std::string& title, std::span<const double> r) {
    if (r.size() < 2 || constant(r)) return empty_plot(title, r.size() < 2 ? "too few observations" : "zero variance");
    const auto bins = std::clamp<std::size_t>(static_cast<std::size_t>(std::sqrt(static_cast<double>(r.size()))), 5, 60);
    const auto h = histogram(r, bins);
    double mean = 0.0;
    for (double x : r) mean += x;
    mean /= static_cast<double>(r.size());
    double ss = 0.0;
    for (double x : r) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(r.size() - 1));
    const double peak = 1.0 / (sd * std::sqrt(2.0 * std::numbers::pi));
    const double ymax = std::max(*std::max_element(h.density.begin(), h.density.end()), peak) * 1.05;
    const double hi = h.lo + h.width * static_cast<double>(bins);
    Canvas c(title, h.lo, hi, 0.0, ymax);
    for (std::size_t b = 0; b < bins; ++b) {
        c.rect(h.lo + h.width * static_cast<double>(b), 0.0, h.lo + h.width * static_cast<double>(b + 1), h.density[b],
               "#9db7e0");
    }
    std::vector<double> xs(201), ys(201);
    for (std::size_t i = 0; i <= 200; ++i) {
        xs[i] = h.lo + (hi - h.lo) * static_cast<double>(i) / 200.0;
        const double z = (xs[i] - mean) / sd;
        ys[i] = peak * std::exp(-0.5 * z * z);
    }
    c.polyline(xs, ys, "#c0392b", 1.5);
    return c.finish();
}

std::string qq_plot(const std::string& title, std::span<const double> r) {
    if (r.size() < 2 || constant(r)) return empty_plot(title, r.size() < 2 ? "too few observations" : "zero variance");
    const auto pts = probability_plot_points(r);
    double lo = std::min(pts.front().theoretical, pts.front().sample);
    double hi = std::max(pts.back().theoretical, pts.back().sample);
    Canvas c(title, lo, hi, lo, hi);
    c.line(lo, lo, hi, hi, "#c0392b", "4,3");
    for (const auto& p : pts) c.dot(p.theoretical, p.sample, "#1f4e9c");
    return c.finish();
}

std::string acf_plot(const std::string& title, const randomness::AcfResult& a) {
    const double band = 1.96 * a.se();
    double m = band;
    for (double r : a.rho) m = std::max(m, std::fabs(r));
    m *= 1.1;
    if (!(m > 0.0) || !std::isfinite(m)) m = 1.0;
    Canvas c(title, 0.0, static_cast<double>(a.max_lag) + 1.0, -m, m);
    c.line(0.0, 0.0, static_cast<double>(a.max_lag) + 1.0, 0.0, "#444");
    if (std::isfinite(band)) {
        c.line(0.0, band, static_cast<double>(a.max_lag) + 1.0, band, "#c0392b", "4,3");
        c.line(0.0, -band, static_cast<double>(a.max_lag) + 1.0, -band, "#c0392b", "4,3");
    }
    for (std::size_t k = 1; k <= a.rho.size(); ++k) {
        c.line(static_cast<double>(k), 0.0, static_cast<double>(k), a.rho[k - 1], "#1f4e9c");
        c.dot(static_cast<double>(k), a.rho[k - 1], "#1f4e9c");
    }
    return c.finish();
}

std::string hp_plot(const std::string& title, std::span<const double> y, double lambda) {
    if (y.size() < 4) return empty_plot(title, "too few observations");
    const auto d = hp::hp_filter(y, lambda);
    const auto xs = index_axis(y.size());
    auto [lo, hi] = range(y);
    const auto [tlo, thi] = range(d.trend);
    Canvas c(title, 0.0, static_cast<double>(y.size() - 1), std::min(lo, tlo), std::max(hi, thi));
    c.polyline(xs, y, "#9db7e0");
    c.polyline(xs, d.trend, "#c0392b", 2.0);
    return c.finish();
}

std::string slug(const std::string& s) {
    std::string out;
    for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return out;
}

}  // namespace

std::vector<ProbabilityPoint> probability_plot_points(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) throw StatError(StatErrorKind::InsufficientData, "probability plot needs at least 2 values");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    double mean = 0.0;
    for (double x : sorted) mean += x;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double x : sorted) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(sd > 0.0)) throw StatError(StatErrorKind::ZeroVariance, "probability plot of a constant sample");
    std::vector<ProbabilityPoint> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        pts[i] = {stats::normal_icdf(p), (sorted[i] - mean) / sd};
    }
    return pts;
}

Histogram histogram(std::span<const double> values, std::size_t bins) {
    if (values.empty() || bins == 0) throw StatError(StatErrorKind::InsufficientData, "histogram of an empty sample");
    const auto [lo, hi] = range(values);
    Histogram h;
    h.lo = lo;
    h.width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
    std::vector<std::size_t> counts(bins, 0);
    for (double x : values) {
        auto b = static_cast<std::size_t>((x - lo) / h.width);
        counts[std::min(b, bins - 1)]++;
    }
    h.density.resize(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        h.density[b] = static_cast<double>(counts[b]) / (static_cast<double>(values.size()) * h.width);
    }
    return h;
}

std::vector<RenderedFile> render_plots(const AnalysisOutput& output, const AnalysisConfig& config) {
    std::vector<RenderedFile> files;
    for (std::size_t i = 0; i < output.inputs.size() && i < output.report.indices.size(); ++i) {
        const auto& in = output.inputs[i];
        const auto& idx = output.report.indices[i];
        const auto prices = segment(in.prices, config.scheme);
        const auto returns = segment(in.returns, config.scheme);
        const std::string dir = "plots/" + slug(idx.index_name) + "/";
        for (std::size_t p = 0; p < config.scheme.periods().size(); ++p) {
            const auto& label = config.scheme.periods()[p].label;
            const std::string base = dir + slug(label) + "_";
            const std::string tag = idx.index_name + " (" + label + ")";
            const auto pv = prices.parts[p].second.values();
            const auto rv = returns.parts[p].second.values();
            files.push_back({base + "price.svg", series_plot("Price " + tag, pv)});
            files.push_back({base + "returns.svg", series_plot("Returns " + tag, rv)});
            files.push_back({base + "hist.svg", hist_plot("Return histogram " + tag, rv)});
            files.push_back({base + "qq.svg", qq_plot("Normal probability plot " + tag, rv)});
            const auto& pr = p < idx.periods.size() ? idx.periods[p] : PeriodResult{};
            files.push_back({base + "acf.svg", pr.acf ? acf_plot("Autocorrelation " + tag, *pr.acf)
                                                      : empty_plot("Autocorrelation " + tag, "not available")});
            std::string hp_svg;
            try {
                hp_svg = hp_plot("HP trend of returns " + tag, rv, config.hp_lambda);
            } catch (const std::exception& e) {
                hp_svg = empty_plot("HP trend of returns " + tag, e.what());
            }
            files.push_back({base + "hp.svg", hp_svg});
        }
    }
    return files;
}

}  // namespace effitest::plots
