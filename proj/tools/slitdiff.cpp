// Command-line front end: pattern / compare / sweep / bandlimit /
// convergence subcommands over a shared flag set.  Precedence is
// CLI flag > config file key > built-in default.
//
// Exit codes: 0 success, 1 configuration error, 2 numerical-precondition
// error (e.g. a quadrature Nyquist violation).

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slitdiff/slitdiff.hpp"

namespace {

struct Flags {
    std::string config;
    std::string method, wavelength, wavenumber, slit_width, slits, separation,
        screen_distance, theta_max, samples, panels, normalize, output, format, plot, incidence,
        source_distance, band_limit, y_max_over_a, theta, n_list, sweep_lambda_over_a,
        sweep_theta_max, sweep_huygens_n, sweep_screen_distance;
};

void add_common_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "config file of 'key = value' lines");
    sub->add_option("--method", f.method,
                    "comma-separated methods: marcella, fraunhofer, huygens:N, "
                    "kirchhoff:{freshman|kirchhoff|dirichlet|neumann}");
    auto* wl = sub->add_option("--wavelength", f.wavelength, "wavelength (excludes --wavenumber)");
    auto* wn = sub->add_option("--wavenumber", f.wavenumber, "wavenumber k (excludes --wavelength)");
    wl->excludes(wn);
    wn->excludes(wl);
    sub->add_option("--slit-width", f.slit_width, "slit width a");
    sub->add_option("--slits", f.slits, "1 or 2");
    sub->add_option("--separation", f.separation, "center separation d for slits=2");
    sub->add_option("--screen-distance", f.screen_distance, "observation distance L");
    sub->add_option("--theta-max", f.theta_max, "half-range of scattering angles, degrees");
    sub->add_option("--samples", f.samples, "grid sample count");
    sub->add_option("--panels", f.panels,
                    "per-slit quadrature panels for kirchhoff methods "
                    "(default: the Nyquist minimum; lower is an error)");
    sub->add_option("--normalize", f.normalize, "raw | peak | probability");
    sub->add_option("--output", f.output, "output file path");
    sub->add_option("--format", f.format, "csv | json");
    sub->add_option("--plot", f.plot, "also write an SVG plot to this path");
    sub->add_option("--incidence", f.incidence, "incidence angle theta', degrees");
    sub->add_option("--source-distance", f.source_distance,
                    "source distance r0, or 'plane-wave'");
    sub->add_option("--band-limit", f.band_limit, "band limit k_m (bandlimit subcommand)");
    sub->add_option("--y-max-over-a", f.y_max_over_a, "profile half-range in units of a");
    sub->add_option("--theta", f.theta, "angle for convergence studies, degrees");
    sub->add_option("--n-list", f.n_list, "comma-separated huygens source counts");
    sub->add_option("--sweep-lambda-over-a", f.sweep_lambda_over_a, "sweep axis: lambda/a");
    sub->add_option("--sweep-theta-max", f.sweep_theta_max, "sweep axis: theta_max degrees");
    sub->add_option("--sweep-huygens-n", f.sweep_huygens_n, "sweep axis: huygens N");
    sub->add_option("--sweep-screen-distance", f.sweep_screen_distance, "sweep axis: L");
}

slitdiff::RunConfig build_config(const CLI::App* sub, const Flags& f) {
    slitdiff::RunConfig cfg;
    if (sub->count("--config")) slitdiff::parse_config_file(cfg, f.config);
    auto apply = [&](const char* flag, const char* key, const std::string& value) {
        if (sub->count(flag)) slitdiff::apply_config_key(cfg, key, value);
    };
    apply("--method", "methods", f.method);
    apply("--wavelength", "wavelength", f.wavelength);
    apply("--wavenumber", "wavenumber", f.wavenumber);
    apply("--slit-width", "slit_width", f.slit_width);
    apply("--slits", "slits", f.slits);
    apply("--separation", "separation", f.separation);
    apply("--screen-distance", "screen_distance", f.screen_distance);
    apply("--theta-max", "theta_max_deg", f.theta_max);
    apply("--samples", "samples", f.samples);
    apply("--panels", "panels", f.panels);
    apply("--normalize", "normalize", f.normalize);
    apply("--output", "output", f.output);
    apply("--format", "format", f.format);
    apply("--plot", "plot", f.plot);
    apply("--incidence", "incidence_deg", f.incidence);
    apply("--source-distance", "source_distance", f.source_distance);
    apply("--band-limit", "band_limit", f.band_limit);
    apply("--y-max-over-a", "y_max_over_a", f.y_max_over_a);
    apply("--theta", "theta_deg", f.theta);
    apply("--n-list", "n_list", f.n_list);
    apply("--sweep-lambda-over-a", "sweep_lambda_over_a", f.sweep_lambda_over_a);
    apply("--sweep-theta-max", "sweep_theta_max_deg", f.sweep_theta_max);
    apply("--sweep-huygens-n", "sweep_huygens_n", f.sweep_huygens_n);
    apply("--sweep-screen-distance", "sweep_screen_distance", f.sweep_screen_distance);
    slitdiff::validate_config(cfg);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scalar single/double-slit diffraction calculator"};
    app.require_subcommand(1);

    Flags flags;
    CLI::App* pattern = app.add_subcommand("pattern", "per-method intensity patterns");
    CLI::App* compare = app.add_subcommand("compare", "pairwise deviations between methods");
    CLI::App* sweep = app.add_subcommand("sweep", "deviations over regime axes");
    CLI::App* bandlimit =
        app.add_subcommand("bandlimit", "band-limited top-hat reconstruction profile");
    CLI::App* convergence =
        app.add_subcommand("convergence", "huygens sum error against the closed form");
    for (CLI::App* sub : {pattern, compare, sweep, bandlimit, convergence})
        add_common_flags(sub, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const CLI::App* sub = app.get_subcommands().front();
        const auto cfg = build_config(sub, flags);
        std::vector<std::string> written;
        if (sub == pattern) written = slitdiff::run_pattern(cfg);
        else if (sub == compare) written = slitdiff::run_compare(cfg);
        else if (sub == sweep) written = slitdiff::run_sweep(cfg);
        else if (sub == bandlimit) written = slitdiff::run_bandlimit(cfg);
        else written = slitdiff::run_convergence(cfg);
        for (const auto& path : written) std::cout << "wrote " << path << '\n';
        return 0;
    } catch (const slitdiff::nyquist_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const slitdiff::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
