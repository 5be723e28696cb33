#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slitdiff/errors.hpp"
#include "slitdiff/math.hpp"

namespace slitdiff {

// Incident wave: wavenumber k, incidence angle theta' measured from the
// screen normal, and the source distance r0.  No source_distance means a
// plane wave (the r0 -> infinity limit).
class WaveSpec {
public:
    WaveSpec(double k, double theta_incident, std::optional<double> source_distance)
        : k_(k), theta_incident_(theta_incident), source_distance_(source_distance) {
        if (!(k > 0.0) || !std::isfinite(k))
            throw spec_error("WaveSpec: wavenumber k must be finite and > 0");
        if (!(std::abs(theta_incident) < pi / 2.0))
            throw spec_error("WaveSpec: |theta_incident| must be < pi/2");
        if (source_distance_ && !(*source_distance_ > 0.0))
            throw spec_error("WaveSpec: source_distance must be > 0 when finite");
    }

    static WaveSpec plane(double k, double theta_incident = 0.0) {
        return WaveSpec(k, theta_incident, std::nullopt);
    }
    static WaveSpec from_source(double k, double theta_incident, double source_distance) {
        return WaveSpec(k, theta_incident, source_distance);
    }

    double k() const { return k_; }
    double wavelength() const { return 2.0 * pi / k_; }
    double theta_incident() const { return theta_incident_; }
    bool is_plane_wave() const { return !source_distance_.has_value(); }
    double source_distance() const { return *source_distance_; }

private:
    double k_;
    double theta_incident_;
    std::optional<double> source_distance_;
};

// Strictly increasing scattering angles, all inside (-pi/2, pi/2).
class AngleGrid {
public:
    explicit AngleGrid(std::vector<double> thetas) : thetas_(std::move(thetas)) {
        if (thetas_.empty()) throw spec_error("AngleGrid: empty angle list");
        for (std::size_t i = 0; i < thetas_.size(); ++i) {
            if (!(std::abs(thetas_[i]) < pi / 2.0))
                throw spec_error("AngleGrid: every |theta| must be < pi/2");
            if (i > 0 && !(thetas_[i] > thetas_[i - 1]))
                throw spec_error("AngleGrid: angles must be strictly increasing");
        }
    }

    // Symmetric grid over [-theta_max, theta_max]; odd sample counts place a
    // point exactly at theta = 0.
    static AngleGrid linspace(double theta_max, std::size_t samples) {
        if (!(theta_max > 0.0 && theta_max < pi / 2.0))
            throw spec_error("AngleGrid: theta_max must lie in (0, pi/2)");
        if (samples < 2) throw spec_error("AngleGrid: need at least 2 samples");
        std::vector<double> t(samples);
        for (std::size_t i = 0; i < samples; ++i) {
            const double u = 2.0 * static_cast<double>(i) / static_cast<double>(samples - 1) - 1.0;
            t[i] = theta_max * u;
        }
        return AngleGrid(std::move(t));
    }

    const std::vector<double>& thetas() const { return thetas_; }
    std::size_t size() const { return thetas_.size(); }
    double operator[](std::size_t i) const { return thetas_[i]; }
    double theta_max() const { return std::max(std::abs(thetas_.front()), std::abs(thetas_.back())); }

    friend bool operator==(const AngleGrid& a, const AngleGrid& b) {
        return a.thetas_ == b.thetas_;
    }

private:
    std::vector<double> thetas_;
};

enum class Normalization { raw, peak, probability };

inline const char* to_string(Normalization n) {
    switch (n) {
        case Normalization::raw: return "raw";
        case Normalization::peak: return "peak";
        case Normalization::probability: return "probability";
    }
    return "?";
}

// Per-angle complex amplitude and intensity for one method on one grid.
struct Pattern {
    std::string method;
    AngleGrid grid;
    std::vector<cdouble> amplitudes;
    std::vector<double> intensities;
    Normalization normalization = Normalization::raw;
};

// Raw pattern: intensities are exactly |amplitude|^2.
inline Pattern make_pattern(std::string method, AngleGrid grid, std::vector<cdouble> amplitudes) {
    if (amplitudes.size() != grid.size())
        throw spec_error("Pattern: amplitude count must match grid length");
    std::vector<double> inten(amplitudes.size());
    for (std::size_t i = 0; i < amplitudes.size(); ++i) inten[i] = std::norm(amplitudes[i]);
    return Pattern{std::move(method), std::move(grid), std::move(amplitudes), std::move(inten),
                   Normalization::raw};
}

// Scale so the maximum intensity is exactly 1.0.  The anchor is the first
// (smallest-theta) grid point attaining the maximum; any later point whose
// scaled intensity still rounds to 1.0 is nudged down one ulp so a series
// carries exactly one peak row.
inline Pattern peak_normalized(Pattern p) {
    std::size_t anchor = 0;
    double peak = -1.0;
    for (std::size_t i = 0; i < p.intensities.size(); ++i) {
        if (p.intensities[i] > peak) {
            peak = p.intensities[i];
            anchor = i;
        }
    }
    if (!(peak > 0.0))
        throw spec_error("peak_normalized: pattern has no positive intensity");
    const double amp_scale = 1.0 / std::sqrt(peak);
    for (auto& a : p.amplitudes) a *= amp_scale;
    for (std::size_t i = 0; i < p.intensities.size(); ++i) {
        p.intensities[i] /= peak;
        if (i != anchor && p.intensities[i] == 1.0)
            p.intensities[i] = std::nextafter(1.0, 0.0);
    }
    p.intensities[anchor] = 1.0;
    p.normalization = Normalization::peak;
    return p;
}

// Scale so the trapezoidal integral of intensity over k_y = k sin(theta)
// across the grid equals 1.
inline Pattern probability_normalized(Pattern p, double k) {
    if (!(k > 0.0)) throw spec_error("probability_normalized: k must be > 0");
    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < p.grid.size(); ++i) {
        const double dky = k * (std::sin(p.grid[i + 1]) - std::sin(p.grid[i]));
        mass += 0.5 * (p.intensities[i] + p.intensities[i + 1]) * dky;
    }
    if (!(mass > 0.0))
        throw spec_error("probability_normalized: pattern carries no probability mass");
    const double amp_scale = 1.0 / std::sqrt(mass);
    for (auto& a : p.amplitudes) a *= amp_scale;
    for (auto& v : p.intensities) v /= mass;
    p.normalization = Normalization::probability;
    return p;
}

// Pairwise deviation between two patterns after peak normalization, with
// the regime parameters the comparison was run at.
struct ComparisonReport {
    std::string method_a;
    std::string method_b;
    AngleGrid grid;
    double max_abs_deviation = 0.0;
    double rms_deviation = 0.0;
    std::optional<double> lambda_over_a;  // unset when no wave/aperture context
    double theta_max = 0.0;
};

inline ComparisonReport compare_patterns(const Pattern& a, const Pattern& b,
                                         std::optional<double> lambda_over_a = std::nullopt) {
    if (!(a.grid == b.grid))
        throw spec_error("compare_patterns: patterns use different angle grids");
    const Pattern pa = peak_normalized(a);
    const Pattern pb = peak_normalized(b);
    double max_abs = 0.0;
    double sumsq = 0.0;
    for (std::size_t i = 0; i < pa.intensities.size(); ++i) {
        const double d = std::abs(pa.intensities[i] - pb.intensities[i]);
        max_abs = std::max(max_abs, d);
        sumsq += d * d;
    }
    const double rms = std::sqrt(sumsq / static_cast<double>(pa.intensities.size()));
    return ComparisonReport{a.method, b.method, a.grid, max_abs, rms, lambda_over_a,
                            a.grid.theta_max()};
}

}  // namespace slitdiff
