#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "slitdiff/bandlimit.hpp"
#include "slitdiff/config.hpp"
#include "slitdiff/huygens.hpp"
#include "slitdiff/io.hpp"
#include "slitdiff/kirchhoff.hpp"
#include "slitdiff/momentum.hpp"
#include "slitdiff/pattern.hpp"

namespace slitdiff {

namespace detail {

inline unsigned worker_count() {
    if (const char* env = std::getenv("SLITDIFF_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end && *end == '\0' && n >= 1) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Each index is computed independently into its own slot, so the result is
// bitwise identical for any worker count or schedule.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::mutex mu;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += workers) f(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

// One method's amplitude at one scattering angle.  Kirchhoff methods use
// the caller's per-slit panel count, or the Nyquist rule for the exact
// geometry when none is given.
inline cdouble method_amplitude(const Method& m, const ApertureSpec& ap, const WaveSpec& w,
                                double screen_distance, double theta,
                                std::optional<long> panels = std::nullopt,
                                Kernel kernel = Kernel::spherical) {
    switch (m.kind) {
        case Method::Kind::marcella:
            return momentum_amplitude(ap, w.k() * std::sin(theta));
        case Method::Kind::fraunhofer:
            return fraunhofer_amplitude(ap, w.k(), theta);
        case Method::Kind::huygens:
            return huygens_sum(HuygensConfig(ap.total_width(), w.k(), m.huygens_n), theta);
        case Method::Kind::kirchhoff: {
            const ObservationPoint obs{screen_distance, theta};
            const long n = panels ? *panels : kirchhoff_min_panels(ap, w, obs);
            return kirchhoff_amplitude(ap, w, m.variant, obs, n, kernel);
        }
    }
    throw spec_error("method_amplitude: unhandled method kind");
}

inline Pattern evaluate_method(const Method& m, const ApertureSpec& ap, const WaveSpec& w,
                               const AngleGrid& grid, double screen_distance,
                               std::optional<long> panels = std::nullopt,
                               Kernel kernel = Kernel::spherical) {
    std::vector<cdouble> amps(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        amps[i] = method_amplitude(m, ap, w, screen_distance, grid[i], panels, kernel);
    });
    return make_pattern(m.id, grid, std::move(amps));
}

inline Pattern apply_normalization(Pattern p, Normalization mode, double k) {
    switch (mode) {
        case Normalization::raw: return p;
        case Normalization::peak: return peak_normalized(std::move(p));
        case Normalization::probability: return probability_normalized(std::move(p), k);
    }
    return p;
}

// Raw patterns for every selected method on the shared grid.
inline std::vector<Pattern> compute_patterns(const RunConfig& cfg) {
    const auto ap = cfg.aperture();
    const auto w = cfg.wave();
    const auto grid = cfg.grid();
    std::vector<Pattern> out;
    for (const Method& m : cfg.methods())
        out.push_back(evaluate_method(m, ap, w, grid, cfg.screen_L(), cfg.panels, cfg.kernel));
    return out;
}

namespace detail {

inline std::string with_method_tag(const std::string& path, const std::string& tag) {
    const std::size_t slash = path.find_last_of('/');
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "." + tag;
    return path.substr(0, dot) + "." + tag + path.substr(dot);
}

inline std::string default_ext(OutputFormat f) {
    return f == OutputFormat::csv ? ".csv" : ".json";
}

inline std::string plot_data_path(const std::string& plot_path) {
    const std::size_t slash = plot_path.find_last_of('/');
    const std::size_t dot = plot_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return plot_path + ".data.csv";
    return plot_path.substr(0, dot) + ".data.csv";
}

inline void emit_pattern_plot(const RunConfig& cfg, const std::vector<Pattern>& patterns) {
    std::vector<PlotSeries> series;
    series.reserve(patterns.size());
    for (const auto& p : patterns) {
        PlotSeries s;
        s.label = p.method;
        s.xs.reserve(p.grid.size());
        for (std::size_t i = 0; i < p.grid.size(); ++i) s.xs.push_back(std::sin(p.grid[i]));
        s.ys = p.intensities;
        series.push_back(std::move(s));
    }
    write_plot_svg(cfg.plot, "sin &#952;", "normalized intensity", series);
    write_plot_data_csv(plot_data_path(cfg.plot), "sin_theta", series);
}

}  // namespace detail

// `pattern` subcommand: one file per method.  A single selected method goes
// exactly to the output path; several methods get the method id inserted
// before the extension.
inline std::vector<std::string> run_pattern(const RunConfig& cfg) {
    const std::string base =
        cfg.output.empty() ? "pattern" + detail::default_ext(cfg.format) : cfg.output;
    auto patterns = compute_patterns(cfg);
    for (auto& p : patterns) p = apply_normalization(std::move(p), cfg.normalize, cfg.k());

    std::vector<std::string> written;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        const std::string path =
            patterns.size() == 1
                ? base
                : detail::with_method_tag(base, cfg.methods()[i].file_tag());
        if (cfg.format == OutputFormat::csv)
            write_pattern_csv(path, patterns[i], cfg.k());
        else
            write_pattern_json(path, patterns[i], cfg.k());
        written.push_back(path);
    }
    if (!cfg.plot.empty()) {
        detail::emit_pattern_plot(cfg, patterns);
        written.push_back(cfg.plot);
        written.push_back(detail::plot_data_path(cfg.plot));
    }
    return written;
}

// Pairwise reports between all selected methods, in selection order.
inline std::vector<ComparisonReport> compute_compare(const RunConfig& cfg) {
    if (cfg.method_names.size() < 2)
        throw config_error("compare needs at least two methods");
    const auto patterns = compute_patterns(cfg);
    std::vector<ComparisonReport> reports;
    for (std::size_t i = 0; i < patterns.size(); ++i)
        for (std::size_t j = i + 1; j < patterns.size(); ++j)
            reports.push_back(compare_patterns(patterns[i], patterns[j], cfg.lambda_over_a()));
    return reports;
}

inline std::vector<std::string> run_compare(const RunConfig& cfg) {
    const std::string path =
        cfg.output.empty() ? "compare" + detail::default_ext(cfg.format) : cfg.output;
    const auto reports = compute_compare(cfg);
    if (cfg.format == OutputFormat::csv)
        write_compare_csv(path, reports);
    else
        write_compare_json(path, reports);
    std::vector<std::string> written{path};
    if (!cfg.plot.empty()) {
        auto patterns = compute_patterns(cfg);
        for (auto& p : patterns) p = peak_normalized(std::move(p));
        detail::emit_pattern_plot(cfg, patterns);
        written.push_back(cfg.plot);
        written.push_back(detail::plot_data_path(cfg.plot));
    }
    return written;
}

// One sweep cell: the regime axes actually applied plus the pairwise report.
struct SweepCell {
    double lambda_over_a;
    double theta_max_deg;
    long huygens_n;  // 0 when no huygens method is selected
    double screen_distance;
    ComparisonReport report;
};

inline std::vector<SweepCell> compute_sweep(const RunConfig& cfg) {
    if (cfg.sweep_lambda_over_a.empty() && cfg.sweep_theta_max_deg.empty() &&
        cfg.sweep_huygens_n.empty() && cfg.sweep_screen_distance.empty())
        throw config_error("sweep needs at least one sweep axis");

    long base_n = 0;
    for (const Method& m : cfg.methods())
        if (m.kind == Method::Kind::huygens) {
            base_n = m.huygens_n;
            break;
        }
    const std::vector<double> loa_axis = cfg.sweep_lambda_over_a.empty()
                                             ? std::vector<double>{cfg.lambda_over_a()}
                                             : cfg.sweep_lambda_over_a;
    const std::vector<double> theta_axis = cfg.sweep_theta_max_deg.empty()
                                               ? std::vector<double>{cfg.theta_max_deg}
                                               : cfg.sweep_theta_max_deg;
    const std::vector<long> n_axis =
        cfg.sweep_huygens_n.empty() ? std::vector<long>{base_n} : cfg.sweep_huygens_n;
    const std::vector<double> L_axis = cfg.sweep_screen_distance.empty()
                                           ? std::vector<double>{cfg.screen_L()}
                                           : cfg.sweep_screen_distance;

    std::vector<SweepCell> cells;
    for (const double loa : loa_axis)
        for (const double tmax : theta_axis)
            for (const long n : n_axis)
                for (const double L : L_axis) {
                    RunConfig cell = cfg;
                    cell.wavenumber.reset();
                    cell.wavelength = loa * cfg.slit_width;
                    cell.theta_max_deg = tmax;
                    cell.screen_distance = L;
                    if (n > 0)
                        for (auto& name : cell.method_names) {
                            Method m = parse_method(name);
                            if (m.kind == Method::Kind::huygens)
                                name = "huygens:" + std::to_string(n);
                        }
                    for (auto& report : compute_compare(cell))
                        cells.push_back({loa, tmax, n, L, std::move(report)});
                }
    return cells;
}

inline constexpr const char* sweep_csv_header =
    "lambda_over_a,theta_max_deg,huygens_n,screen_distance,method_a,method_b,"
    "max_abs_deviation,rms_deviation";

inline std::vector<std::string> run_sweep(const RunConfig& cfg) {
    const std::string path =
        cfg.output.empty() ? "sweep" + detail::default_ext(cfg.format) : cfg.output;
    const auto cells = compute_sweep(cfg);
    if (cfg.format == OutputFormat::csv) {
        auto out = detail::open_output(path);
        out << sweep_csv_header << '\n';
        for (const auto& c : cells) {
            out << format_double(c.lambda_over_a) << ',' << format_double(c.theta_max_deg) << ','
                << (c.huygens_n > 0 ? std::to_string(c.huygens_n) : std::string{}) << ','
                << format_double(c.screen_distance) << ',' << c.report.method_a << ','
                << c.report.method_b << ',' << format_double(c.report.max_abs_deviation) << ','
                << format_double(c.report.rms_deviation) << '\n';
        }
    } else {
        auto j = nlohmann::ordered_json::array();
        for (const auto& c : cells) {
            nlohmann::ordered_json e{{"lambda_over_a", c.lambda_over_a},
                                     {"theta_max_deg", c.theta_max_deg}};
            if (c.huygens_n > 0) e["huygens_n"] = c.huygens_n;
            e["screen_distance"] = c.screen_distance;
            e["method_a"] = c.report.method_a;
            e["method_b"] = c.report.method_b;
            e["max_abs_deviation"] = c.report.max_abs_deviation;
            e["rms_deviation"] = c.report.rms_deviation;
            j.push_back(std::move(e));
        }
        auto out = detail::open_output(path);
        out << j.dump(2) << '\n';
    }
    return {path};
}

inline std::vector<std::string> run_convergence(const RunConfig& cfg) {
    if (cfg.slits != 1)
        throw config_error("convergence studies the single-slit huygens sum (slits = 1)");
    const std::string path =
        cfg.output.empty() ? "convergence" + detail::default_ext(cfg.format) : cfg.output;
    const auto points = huygens_convergence(cfg.slit_width, cfg.k(), cfg.n_list,
                                            deg_to_rad(cfg.theta_deg));
    if (cfg.format == OutputFormat::csv)
        write_convergence_csv(path, points);
    else
        write_convergence_json(path, points);
    return {path};
}

inline std::vector<std::string> run_bandlimit(const RunConfig& cfg) {
    if (cfg.slits != 1)
        throw config_error("bandlimit reconstructs the single-slit top hat (slits = 1)");
    const std::string path =
        cfg.output.empty() ? "bandlimit" + detail::default_ext(cfg.format) : cfg.output;
    const double a = cfg.slit_width;
    const BandlimitConfig bl(a, cfg.band_limit_k());
    std::vector<double> ys(static_cast<std::size_t>(cfg.samples));
    const double y_max = cfg.y_max_over_a * a;
    for (std::size_t i = 0; i < ys.size(); ++i)
        ys[i] = y_max * (2.0 * static_cast<double>(i) / static_cast<double>(ys.size() - 1) - 1.0);
    const auto profile = reconstruction_profile(bl, ys);
    if (cfg.format == OutputFormat::csv)
        write_bandlimit_csv(path, profile);
    else
        write_bandlimit_json(path, a, bl.k_m, profile);

    std::vector<std::string> written{path};
    if (!cfg.plot.empty()) {
        // psi' sqrt(a) against y/a, with the exact top hat overlaid
        PlotSeries rec{"reconstruction", {}, {}};
        PlotSeries hat{"top-hat", {}, {}};
        const double root_a = std::sqrt(a);
        for (const auto& p : profile) {
            rec.xs.push_back(p.y / a);
            rec.ys.push_back(p.reconstructed * root_a);
            hat.xs.push_back(p.y / a);
            hat.ys.push_back((p.reconstructed - p.deviation) * root_a);
        }
        const std::vector<PlotSeries> series{rec, hat};
        write_plot_svg(cfg.plot, "y / a", "&#968;&#8242; &#8730;a", series);
        write_plot_data_csv(detail::plot_data_path(cfg.plot), "y_over_a", series);
        written.push_back(cfg.plot);
        written.push_back(detail::plot_data_path(cfg.plot));
    }
    return written;
}

}  // namespace slitdiff
