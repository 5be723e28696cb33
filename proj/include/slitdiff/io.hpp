#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "slitdiff/bandlimit.hpp"
#include "slitdiff/errors.hpp"
#include "slitdiff/huygens.hpp"
#include "slitdiff/pattern.hpp"

namespace slitdiff {

// Shortest decimal string that round-trips the binary64 value exactly.
inline std::string format_double(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

namespace detail {

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: identical bytes everywhere
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

inline double parse_field(std::string_view v, const std::string& path) {
    double out{};
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw std::runtime_error("malformed number '" + std::string(v) + "' in " + path);
    return out;
}

}  // namespace detail

inline constexpr const char* pattern_csv_header =
    "theta_rad,sin_theta,k_y,re_amp,im_amp,intensity";

inline void write_pattern_csv(const std::string& path, const Pattern& p, double k) {
    auto out = detail::open_output(path);
    out << pattern_csv_header << '\n';
    for (std::size_t i = 0; i < p.grid.size(); ++i) {
        const double theta = p.grid[i];
        const double s = std::sin(theta);
        out << format_double(theta) << ',' << format_double(s) << ',' << format_double(k * s)
            << ',' << format_double(p.amplitudes[i].real()) << ','
            << format_double(p.amplitudes[i].imag()) << ',' << format_double(p.intensities[i])
            << '\n';
    }
}

// Re-reads a pattern CSV; the caller supplies the metadata the file does
// not carry.  Values are exact because the writer uses round-trip decimals.
inline Pattern read_pattern_csv(const std::string& path, const std::string& method,
                                Normalization normalization) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != pattern_csv_header)
        throw std::runtime_error("unexpected CSV header in " + path);
    std::vector<double> thetas;
    std::vector<cdouble> amps;
    std::vector<double> inten;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<std::string_view, 6> f{};
        std::string_view rest = line;
        for (int i = 0; i < 6; ++i) {
            const std::size_t comma = rest.find(',');
            if ((comma == std::string_view::npos) != (i == 5))
                throw std::runtime_error("expected 6 fields per row in " + path);
            f[i] = rest.substr(0, comma);
            if (comma != std::string_view::npos) rest.remove_prefix(comma + 1);
        }
        thetas.push_back(detail::parse_field(f[0], path));
        amps.emplace_back(detail::parse_field(f[3], path), detail::parse_field(f[4], path));
        inten.push_back(detail::parse_field(f[5], path));
    }
    Pattern p{method, AngleGrid(std::move(thetas)), std::move(amps), std::move(inten),
              normalization};
    if (p.amplitudes.size() != p.grid.size() || p.intensities.size() != p.grid.size())
        throw std::runtime_error("inconsistent row data in " + path);
    return p;
}

inline void write_pattern_json(const std::string& path, const Pattern& p, double k) {
    nlohmann::ordered_json j;
    j["method"] = p.method;
    j["normalization"] = to_string(p.normalization);
    j["wavenumber"] = k;
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.grid.size(); ++i) {
        const double theta = p.grid[i];
        const double s = std::sin(theta);
        pts.push_back({{"theta_rad", theta},
                       {"sin_theta", s},
                       {"k_y", k * s},
                       {"re_amp", p.amplitudes[i].real()},
                       {"im_amp", p.amplitudes[i].imag()},
                       {"intensity", p.intensities[i]}});
    }
    auto out = detail::open_output(path);
    out << j.dump(2) << '\n';
}

inline constexpr const char* compare_csv_header =
    "method_a,method_b,max_abs_deviation,rms_deviation,lambda_over_a,theta_max_rad,samples";

inline void write_compare_csv(const std::string& path,
                              std::span<const ComparisonReport> reports) {
    auto out = detail::open_output(path);
    out << compare_csv_header << '\n';
    for (const auto& r : reports) {
        out << r.method_a << ',' << r.method_b << ',' << format_double(r.max_abs_deviation)
            << ',' << format_double(r.rms_deviation) << ','
            << (r.lambda_over_a ? format_double(*r.lambda_over_a) : std::string{}) << ','
            << format_double(r.theta_max) << ',' << r.grid.size() << '\n';
    }
}

inline void write_compare_json(const std::string& path,
                               std::span<const ComparisonReport> reports) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json e{{"method_a", r.method_a},
                                 {"method_b", r.method_b},
                                 {"max_abs_deviation", r.max_abs_deviation},
                                 {"rms_deviation", r.rms_deviation}};
        if (r.lambda_over_a) e["lambda_over_a"] = *r.lambda_over_a;
        e["theta_max_rad"] = r.theta_max;
        e["samples"] = r.grid.size();
        j.push_back(std::move(e));
    }
    auto out = detail::open_output(path);
    out << j.dump(2) << '\n';
}

inline void write_convergence_csv(const std::string& path,
                                  std::span<const ConvergencePoint> points) {
    auto out = detail::open_output(path);
    out << "n,relative_error\n";
    for (const auto& p : points)
        out << p.n << ',' << format_double(p.relative_error) << '\n';
}

inline void write_convergence_json(const std::string& path,
                                   std::span<const ConvergencePoint> points) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& p : points)
        j.push_back({{"n", p.n}, {"relative_error", p.relative_error}});
    auto out = detail::open_output(path);
    out << j.dump(2) << '\n';
}

inline void write_bandlimit_csv(const std::string& path, std::span<const ProfilePoint> points) {
    auto out = detail::open_output(path);
    out << "y,psi_reconstructed,top_hat,deviation\n";
    for (const auto& p : points)
        out << format_double(p.y) << ',' << format_double(p.reconstructed) << ','
            << format_double(p.reconstructed - p.deviation) << ','
            << format_double(p.deviation) << '\n';
}

inline void write_bandlimit_json(const std::string& path, double a, double k_m,
                                 std::span<const ProfilePoint> points) {
    nlohmann::ordered_json j;
    j["slit_width"] = a;
    j["band_limit"] = k_m;
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : points)
        pts.push_back({{"y", p.y},
                       {"psi_reconstructed", p.reconstructed},
                       {"top_hat", p.reconstructed - p.deviation},
                       {"deviation", p.deviation}});
    auto out = detail::open_output(path);
    out << j.dump(2) << '\n';
}

// ---- plotting --------------------------------------------------------

struct PlotSeries {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
};

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace detail

// Self-contained SVG line plot with axes, ticks, and a legend.
inline void write_plot_svg(const std::string& path, const std::string& xlabel,
                           const std::string& ylabel, std::span<const PlotSeries> series) {
    if (series.empty()) throw spec_error("write_plot_svg: need at least one series");
    static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#17becf", "#bcbd22", "#7f7f7f"};
    const double W = 880, H = 540;
    const double ml = 80, mr = 220, mt = 24, mb = 58;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series) {
        if (s.xs.size() != s.ys.size() || s.xs.empty())
            throw spec_error("write_plot_svg: series '" + s.label + "' is empty or ragged");
        for (double x : s.xs) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
        }
        for (double y : s.ys) {
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    const double pad = (ymax > ymin) ? 0.05 * (ymax - ymin) : 0.5;
    ymin -= pad;
    ymax += pad;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    auto out = detail::open_output(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << detail::svg_num(ml) << "\" y1=\"" << detail::svg_num(H - mb)
        << "\" x2=\"" << detail::svg_num(W - mr) << "\" y2=\"" << detail::svg_num(H - mb)
        << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << detail::svg_num(ml) << "\" y1=\"" << detail::svg_num(mt)
        << "\" x2=\"" << detail::svg_num(ml) << "\" y2=\"" << detail::svg_num(H - mb)
        << "\" stroke=\"black\"/>\n";
    // ticks
    for (int i = 0; i <= 4; ++i) {
        const double x = xmin + (xmax - xmin) * i / 4.0;
        const double y = ymin + (ymax - ymin) * i / 4.0;
        out << "<line x1=\"" << detail::svg_num(px(x)) << "\" y1=\"" << detail::svg_num(H - mb)
            << "\" x2=\"" << detail::svg_num(px(x)) << "\" y2=\"" << detail::svg_num(H - mb + 5)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << detail::svg_num(px(x)) << "\" y=\"" << detail::svg_num(H - mb + 20)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << detail::tick_label(x)
            << "</text>\n";
        out << "<line x1=\"" << detail::svg_num(ml - 5) << "\" y1=\"" << detail::svg_num(py(y))
            << "\" x2=\"" << detail::svg_num(ml) << "\" y2=\"" << detail::svg_num(py(y))
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << detail::svg_num(ml - 8) << "\" y=\"" << detail::svg_num(py(y) + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << detail::tick_label(y) << "</text>\n";
    }
    // axis labels
    out << "<text x=\"" << detail::svg_num((ml + W - mr) / 2.0) << "\" y=\""
        << detail::svg_num(H - 12) << "\" font-size=\"14\" text-anchor=\"middle\">" << xlabel
        << "</text>\n"
        << "<text x=\"18\" y=\"" << detail::svg_num((mt + H - mb) / 2.0)
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << detail::svg_num((mt + H - mb) / 2.0) << ")\">" << ylabel << "</text>\n";
    // series
    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = palette[si % 8];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (i) out << ' ';
            out << detail::svg_num(px(s.xs[i])) << ',' << detail::svg_num(py(s.ys[i]));
        }
        out << "\"/>\n";
        // legend entry
        const double ly = mt + 18.0 * static_cast<double>(si) + 10.0;
        out << "<line x1=\"" << detail::svg_num(W - mr + 14) << "\" y1=\"" << detail::svg_num(ly)
            << "\" x2=\"" << detail::svg_num(W - mr + 44) << "\" y2=\"" << detail::svg_num(ly)
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << detail::svg_num(W - mr + 50) << "\" y=\"" << detail::svg_num(ly + 4)
            << "\" font-size=\"12\">" << s.label << "</text>\n";
    }
    out << "</svg>\n";
}

// The numbers behind a plot, one x column plus one column per series.
inline void write_plot_data_csv(const std::string& path, const std::string& x_label,
                                std::span<const PlotSeries> series) {
    if (series.empty()) throw spec_error("write_plot_data_csv: need at least one series");
    auto out = detail::open_output(path);
    out << x_label;
    for (const auto& s : series) out << ',' << s.label;
    out << '\n';
    const std::size_t n = series.front().xs.size();
    for (const auto& s : series)
        if (s.xs != series.front().xs)
            throw spec_error("write_plot_data_csv: series use different x grids");
    for (std::size_t i = 0; i < n; ++i) {
        out << format_double(series.front().xs[i]);
        for (const auto& s : series) out << ',' << format_double(s.ys[i]);
        out << '\n';
    }
}

}  // namespace slitdiff
