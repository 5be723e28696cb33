#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "slitdiff/errors.hpp"
#include "slitdiff/math.hpp"
#include "slitdiff/quadrature.hpp"
#include "slitdiff/sine_integral.hpp"

namespace slitdiff {

// Reconstructing the top-hat wavefunction of a centered slit of width a
// from its momentum spectrum truncated at |k| <= k_m.  Physically k_m <= k
// (since k_y = k sin th never exceeds k), but any positive band limit is
// accepted for analysis.
struct BandlimitConfig {
    double a;
    double k_m;

    BandlimitConfig(double a_, double k_m_) : a(a_), k_m(k_m_) {
        if (!(a > 0.0)) throw spec_error("BandlimitConfig: slit width a must be > 0");
        if (!(k_m > 0.0)) throw spec_error("BandlimitConfig: band limit k_m must be > 0");
    }
};

// Band-limited reconstruction psi'(y), in closed form via the sine
// integral:
//   psi'(y) = (1 / (pi sqrt(a))) [Si(k_m (y + a/2)) - Si(k_m (y - a/2))].
// Even in y about the slit center; tends to 1/sqrt(a) inside the slit and
// to 0 outside as k_m -> infinity, but never reaches the top hat for any
// finite k_m.
inline double bandlimited_reconstruct(const BandlimitConfig& cfg, double y) {
    return (sine_integral(cfg.k_m * (y + cfg.a / 2.0)) -
            sine_integral(cfg.k_m * (y - cfg.a / 2.0))) /
           (pi * std::sqrt(cfg.a));
}

// The same reconstruction evaluated directly as the slit integral of the
// truncated-spectrum kernel,
//   psi'(y) = (1 / (pi sqrt(a))) Integral_{-a/2}^{a/2} sin(k_m (y-y')) / (y-y') dy',
// by Gauss-Legendre panels resolving the kernel oscillation.  Serves as the
// quadrature route the closed form is checked against.
inline double bandlimited_reconstruct_quadrature(const BandlimitConfig& cfg, double y) {
    const long panels = panels_for_phase(cfg.k_m * cfg.a, 16, 10.0);
    const double integral = integrate_gl8(
        [&](double yp) { return cfg.k_m * sinc(cfg.k_m * (y - yp)); },
        -cfg.a / 2.0, cfg.a / 2.0, panels);
    return integral / (pi * std::sqrt(cfg.a));
}

struct ProfilePoint {
    double y;
    double reconstructed;  // psi'(y)
    double deviation;      // psi'(y) - top hat
};

// Pointwise reconstruction over a grid together with the signed deviation
// from the exact top hat (1/sqrt(a) inside the slit, 0 outside).  The grid
// must cover at least [-a, a] so both edges and the exterior are visible.
inline std::vector<ProfilePoint> reconstruction_profile(const BandlimitConfig& cfg,
                                                        std::span<const double> ys) {
    if (ys.empty()) throw spec_error("reconstruction_profile: empty grid");
    for (std::size_t i = 1; i < ys.size(); ++i)
        if (!(ys[i] > ys[i - 1]))
            throw spec_error("reconstruction_profile: grid must be strictly increasing");
    if (!(ys.front() <= -cfg.a && ys.back() >= cfg.a))
        throw spec_error("reconstruction_profile: grid must cover [-a, a]");
    const double inside = 1.0 / std::sqrt(cfg.a);
    std::vector<ProfilePoint> out;
    out.reserve(ys.size());
    for (double y : ys) {
        const double r = bandlimited_reconstruct(cfg, y);
        const double top_hat = (std::abs(y) <= cfg.a / 2.0) ? inside : 0.0;
        out.push_back({y, r, r - top_hat});
    }
    return out;
}

// The small-argument flattening of the reconstruction, psi'(y) ~
// (k_m a / pi) (1/sqrt(a)), expressed as a ratio to the top-hat value:
// exactly 1 when k_m = pi/a, i.e. lambda = 2a.
inline double smallarg_flatness_condition(const BandlimitConfig& cfg) {
    return cfg.k_m * cfg.a / pi;
}

}  // namespace slitdiff
