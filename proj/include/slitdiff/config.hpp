#pragma once

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "slitdiff/aperture.hpp"
#include "slitdiff/errors.hpp"
#include "slitdiff/kirchhoff.hpp"
#include "slitdiff/math.hpp"
#include "slitdiff/pattern.hpp"

namespace slitdiff {

// A diffraction method selection: "marcella", "fraunhofer", "huygens:N",
// or "kirchhoff:variant".  Bare "huygens" and "kirchhoff" pick N = 10000
// and the kirchhoff obliquity factor.
struct Method {
    enum class Kind { marcella, fraunhofer, huygens, kirchhoff };
    Kind kind = Kind::marcella;
    long huygens_n = 10000;
    Obliquity variant = Obliquity::kirchhoff;
    std::string id;  // canonical spelling

    // method id with filesystem-friendly separators
    std::string file_tag() const {
        std::string t = id;
        for (char& c : t)
            if (c == ':') c = '-';
        return t;
    }
};

enum class OutputFormat { csv, json };

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::string where(const std::string& key, int line) {
    if (line > 0) return "'" + key + "' (line " + std::to_string(line) + ")";
    return "'--" + key + "'";
}

inline double parse_double(const std::string& key, std::string_view v, int line) {
    double out{};
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw config_error("invalid number for " + where(key, line) + ": '" + std::string(v) + "'");
    return out;
}

inline long parse_long(const std::string& key, std::string_view v, int line) {
    long out{};
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw config_error("invalid integer for " + where(key, line) + ": '" + std::string(v) + "'");
    return out;
}

inline std::vector<std::string> split_list(std::string_view v) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= v.size()) {
        const std::size_t comma = v.find(',', pos);
        const std::string_view item =
            trim(comma == std::string_view::npos ? v.substr(pos) : v.substr(pos, comma - pos));
        out.emplace_back(item);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

inline Method parse_method(const std::string& name) {
    Method m;
    const std::string_view sv = detail::trim(name);
    const std::size_t colon = sv.find(':');
    const std::string head(sv.substr(0, colon));
    const std::string arg(colon == std::string_view::npos ? "" : sv.substr(colon + 1));

    if (head == "marcella" || head == "fraunhofer") {
        if (!arg.empty()) throw config_error("method '" + head + "' takes no ':' argument");
        m.kind = head == "marcella" ? Method::Kind::marcella : Method::Kind::fraunhofer;
        m.id = head;
        return m;
    }
    if (head == "huygens") {
        m.kind = Method::Kind::huygens;
        if (!arg.empty()) m.huygens_n = detail::parse_long("method", arg, 0);
        if (m.huygens_n < 1) throw config_error("method 'huygens:N' needs N >= 1");
        m.id = "huygens:" + std::to_string(m.huygens_n);
        return m;
    }
    if (head == "kirchhoff") {
        m.kind = Method::Kind::kirchhoff;
        std::string v = arg.empty() ? "kirchhoff" : arg;
        if (v == "freshman") m.variant = Obliquity::freshman;
        else if (v == "kirchhoff") m.variant = Obliquity::kirchhoff;
        else if (v == "dirichlet") m.variant = Obliquity::dirichlet;
        else if (v == "neumann") m.variant = Obliquity::neumann;
        else
            throw config_error("unknown obliquity variant 'kirchhoff:" + v +
                               "' (expected freshman|kirchhoff|dirichlet|neumann)");
        m.id = "kirchhoff:" + v;
        return m;
    }
    throw config_error("unknown method '" + std::string(sv) +
                       "' (expected marcella, fraunhofer, huygens:N, kirchhoff:variant)");
}

// Everything one run needs.  Defaults: a single slit of width 1, lambda =
// a/20, normal-incidence plane wave, screen at 1e4 a, theta in [-15, 15]
// degrees with 501 samples, every method, peak normalization, CSV output.
struct RunConfig {
    int slits = 1;
    double slit_width = 1.0;
    std::optional<double> separation;
    std::optional<double> wavelength;   // mutually exclusive with wavenumber
    std::optional<double> wavenumber;
    double incidence_deg = 0.0;
    std::optional<double> source_distance;  // nullopt = plane wave
    std::optional<double> screen_distance;  // default 1e4 * slit_width
    double theta_max_deg = 15.0;
    long samples = 501;
    std::optional<long> panels;  // per-slit panels for kirchhoff; default: Nyquist minimum
    Kernel kernel = Kernel::spherical;
    std::vector<std::string> method_names = {
        "marcella",           "fraunhofer",          "huygens:10000",
        "kirchhoff:freshman", "kirchhoff:kirchhoff", "kirchhoff:dirichlet",
        "kirchhoff:neumann"};
    Normalization normalize = Normalization::peak;
    OutputFormat format = OutputFormat::csv;
    std::string output;  // empty: subcommand default
    std::string plot;    // empty: no plot

    // bandlimit subcommand
    std::optional<double> band_limit;  // k_m; default: the wavenumber k
    double y_max_over_a = 2.0;

    // convergence subcommand
    double theta_deg = 20.0;
    std::vector<long> n_list = {100, 200, 400, 800, 1600, 3200, 6400, 12800};

    // sweep axes (empty axis = keep the base value)
    std::vector<double> sweep_lambda_over_a;
    std::vector<double> sweep_theta_max_deg;
    std::vector<long> sweep_huygens_n;
    std::vector<double> sweep_screen_distance;

    double k() const {
        if (wavenumber) return *wavenumber;
        if (wavelength) return 2.0 * pi / *wavelength;
        return 2.0 * pi / (slit_width / 20.0);  // default lambda = a/20
    }
    double lambda() const { return 2.0 * pi / k(); }
    double lambda_over_a() const { return lambda() / slit_width; }
    double screen_L() const { return screen_distance.value_or(1e4 * slit_width); }
    double band_limit_k() const { return band_limit.value_or(k()); }

    ApertureSpec aperture() const {
        if (slits == 1) return ApertureSpec::single(slit_width);
        return ApertureSpec::double_slit(slit_width, *separation);
    }
    WaveSpec wave() const {
        return WaveSpec(k(), deg_to_rad(incidence_deg), source_distance);
    }
    AngleGrid grid() const {
        return AngleGrid::linspace(deg_to_rad(theta_max_deg), static_cast<std::size_t>(samples));
    }
    std::vector<Method> methods() const {
        std::vector<Method> out;
        out.reserve(method_names.size());
        for (const auto& n : method_names) out.push_back(parse_method(n));
        return out;
    }
};

// Apply one key = value setting.  line > 0 reports config-file positions;
// line = 0 means the command line.  Unknown keys are hard errors.
inline void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& raw,
                             int line = 0) {
    using detail::parse_double;
    using detail::parse_long;
    const std::string value(detail::trim(raw));
    if (value.empty()) throw config_error("empty value for " + detail::where(key, line));

    if (key == "slits") {
        const long n = parse_long(key, value, line);
        if (n != 1 && n != 2)
            throw config_error(detail::where(key, line) + " must be 1 or 2");
        cfg.slits = static_cast<int>(n);
    } else if (key == "slit_width") {
        cfg.slit_width = parse_double(key, value, line);
    } else if (key == "separation") {
        cfg.separation = parse_double(key, value, line);
    } else if (key == "wavelength") {
        cfg.wavelength = parse_double(key, value, line);
        if (line == 0) cfg.wavenumber.reset();  // a CLI flag replaces the pair
    } else if (key == "wavenumber") {
        cfg.wavenumber = parse_double(key, value, line);
        if (line == 0) cfg.wavelength.reset();
    } else if (key == "incidence_deg") {
        cfg.incidence_deg = parse_double(key, value, line);
    } else if (key == "source_distance") {
        if (value == "plane-wave")
            cfg.source_distance.reset();
        else
            cfg.source_distance = parse_double(key, value, line);
    } else if (key == "screen_distance") {
        cfg.screen_distance = parse_double(key, value, line);
    } else if (key == "theta_max_deg") {
        cfg.theta_max_deg = parse_double(key, value, line);
    } else if (key == "samples") {
        cfg.samples = parse_long(key, value, line);
    } else if (key == "panels") {
        cfg.panels = parse_long(key, value, line);
    } else if (key == "kernel") {
        if (value == "spherical") cfg.kernel = Kernel::spherical;
        else if (value == "cylindrical") cfg.kernel = Kernel::cylindrical;
        else
            throw config_error(detail::where(key, line) + " must be spherical or cylindrical");
    } else if (key == "methods") {
        cfg.method_names = detail::split_list(value);
    } else if (key == "normalize") {
        if (value == "raw") cfg.normalize = Normalization::raw;
        else if (value == "peak") cfg.normalize = Normalization::peak;
        else if (value == "probability") cfg.normalize = Normalization::probability;
        else
            throw config_error(detail::where(key, line) +
                               " must be raw, peak, or probability");
    } else if (key == "format") {
        if (value == "csv") cfg.format = OutputFormat::csv;
        else if (value == "json") cfg.format = OutputFormat::json;
        else
            throw config_error(detail::where(key, line) + " must be csv or json");
    } else if (key == "output") {
        cfg.output = value;
    } else if (key == "plot") {
        cfg.plot = value;
    } else if (key == "band_limit") {
        cfg.band_limit = parse_double(key, value, line);
    } else if (key == "y_max_over_a") {
        cfg.y_max_over_a = parse_double(key, value, line);
    } else if (key == "theta_deg") {
        cfg.theta_deg = parse_double(key, value, line);
    } else if (key == "n_list") {
        cfg.n_list.clear();
        for (const auto& item : detail::split_list(value))
            cfg.n_list.push_back(parse_long(key, item, line));
    } else if (key == "sweep_lambda_over_a") {
        cfg.sweep_lambda_over_a.clear();
        for (const auto& item : detail::split_list(value))
            cfg.sweep_lambda_over_a.push_back(parse_double(key, item, line));
    } else if (key == "sweep_theta_max_deg") {
        cfg.sweep_theta_max_deg.clear();
        for (const auto& item : detail::split_list(value))
            cfg.sweep_theta_max_deg.push_back(parse_double(key, item, line));
    } else if (key == "sweep_huygens_n") {
        cfg.sweep_huygens_n.clear();
        for (const auto& item : detail::split_list(value))
            cfg.sweep_huygens_n.push_back(parse_long(key, item, line));
    } else if (key == "sweep_screen_distance") {
        cfg.sweep_screen_distance.clear();
        for (const auto& item : detail::split_list(value))
            cfg.sweep_screen_distance.push_back(parse_double(key, item, line));
    } else {
        throw config_error("unknown config key " + detail::where(key, line));
    }
}

// Flat "key = value" lines; '#' starts a comment; blank lines ignored.
inline void parse_config_text(RunConfig& cfg, std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        ++line_no;
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (!line.empty()) {
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos)
                throw config_error("expected 'key = value' on line " + std::to_string(line_no));
            const std::string key(detail::trim(line.substr(0, eq)));
            const std::string value(detail::trim(line.substr(eq + 1)));
            if (key.empty())
                throw config_error("missing key before '=' on line " + std::to_string(line_no));
            apply_config_key(cfg, key, value, line_no);
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

inline void parse_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    parse_config_text(cfg, buf.str());
}

// Cross-key invariants, checked after all sources are merged.
inline void validate_config(const RunConfig& cfg) {
    if (cfg.wavelength && cfg.wavenumber)
        throw config_error("'wavelength' and 'wavenumber' are mutually exclusive");
    if (cfg.wavelength && !(*cfg.wavelength > 0.0))
        throw config_error("'wavelength' must be > 0");
    if (cfg.wavenumber && !(*cfg.wavenumber > 0.0))
        throw config_error("'wavenumber' must be > 0");
    if (!(cfg.slit_width > 0.0)) throw config_error("'slit_width' must be > 0");
    if (cfg.slits == 2) {
        if (!cfg.separation)
            throw config_error("missing key 'separation' (required when slits = 2)");
        if (!(*cfg.separation > cfg.slit_width))
            throw config_error("'separation' must exceed 'slit_width' (disjoint slits)");
    }
    if (cfg.samples < 2) throw config_error("'samples' must be at least 2");
    if (cfg.panels && *cfg.panels < 1) throw config_error("'panels' must be >= 1");
    if (!(cfg.theta_max_deg > 0.0 && cfg.theta_max_deg < 90.0))
        throw config_error("'theta_max_deg' must lie in (0, 90)");
    if (!(std::abs(cfg.incidence_deg) < 90.0))
        throw config_error("'incidence_deg' must lie in (-90, 90)");
    if (cfg.source_distance && !(*cfg.source_distance > 0.0))
        throw config_error("'source_distance' must be > 0 (or plane-wave)");
    if (cfg.screen_distance && !(*cfg.screen_distance > 0.0))
        throw config_error("'screen_distance' must be > 0");
    if (cfg.band_limit && !(*cfg.band_limit > 0.0))
        throw config_error("'band_limit' must be > 0");
    if (!(cfg.y_max_over_a >= 1.0))
        throw config_error("'y_max_over_a' must be >= 1 (profile must cover the slit)");
    if (cfg.method_names.empty()) throw config_error("at least one method must be selected");
    for (const auto& name : cfg.method_names) {
        const Method m = parse_method(name);
        if (m.kind == Method::Kind::huygens && cfg.slits != 1)
            throw config_error("method '" + m.id + "' supports a single slit only");
    }
}

}  // namespace slitdiff
