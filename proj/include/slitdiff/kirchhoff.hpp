#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "slitdiff/aperture.hpp"
#include "slitdiff/errors.hpp"
#include "slitdiff/math.hpp"
#include "slitdiff/pattern.hpp"
#include "slitdiff/quadrature.hpp"

namespace slitdiff {

// The four classical boundary-condition schemes, distinguished only by the
// angular weight on the secondary wavelets:
//   freshman   f = 1                          (bare Huygens construction)
//   kirchhoff  f = (cos th + cos th')/2       (both psi and dpsi/dn fixed)
//   dirichlet  f = cos th                     (psi fixed in the aperture)
//   neumann    f = cos th'                    (dpsi/dn fixed in the aperture)
enum class Obliquity { freshman, kirchhoff, dirichlet, neumann };

inline const char* to_string(Obliquity v) {
    switch (v) {
        case Obliquity::freshman: return "freshman";
        case Obliquity::kirchhoff: return "kirchhoff";
        case Obliquity::dirichlet: return "dirichlet";
        case Obliquity::neumann: return "neumann";
    }
    return "?";
}

namespace detail {
inline double obliquity_from_cos(Obliquity v, double cos_theta, double cos_theta_prime) {
    switch (v) {
        case Obliquity::freshman: return 1.0;
        case Obliquity::kirchhoff: return 0.5 * (cos_theta + cos_theta_prime);
        case Obliquity::dirichlet: return cos_theta;
        case Obliquity::neumann: return cos_theta_prime;
    }
    return 1.0;
}
}  // namespace detail

inline double obliquity_factor(Obliquity v, double theta, double theta_prime) {
    return detail::obliquity_from_cos(v, std::cos(theta), std::cos(theta_prime));
}

// Where the diffracted field is evaluated: distance L from the aperture
// center, at scattering angle theta from the screen normal.
struct ObservationPoint {
    double distance = 0.0;
    double angle = 0.0;
};

// Secondary-wavelet kernel.  The slit is an infinite strip, so the strictly
// 2-D propagator would fall off as 1/sqrt(r); the spherical e^{ikr}/r form
// is the default and the one every cross-method comparison uses.
enum class Kernel { spherical, cylindrical };

namespace detail {

// Geometry: the screen lies along the y axis, its normal along +x.  The
// observation point sits at (L cos th, L sin th); a finite source sits at
// (-r0 cos th', -r0 sin th').  For each aperture point (0, y) the local
// angles are recomputed from the exact geometry; a plane wave keeps
// theta' fixed and contributes phase k y sin th' with unit amplitude.
struct SlitGeometry {
    double obs_x, obs_y;         // observation point
    double src_x, src_y;         // finite source (unused for plane waves)
    double sin_theta_prime;      // plane-wave phase slope
    double cos_theta_prime;      // plane-wave local incidence cosine
    bool plane_wave;

    SlitGeometry(const WaveSpec& w, const ObservationPoint& obs)
        : obs_x(obs.distance * std::cos(obs.angle)),
          obs_y(obs.distance * std::sin(obs.angle)),
          src_x(0.0),
          src_y(0.0),
          sin_theta_prime(std::sin(w.theta_incident())),
          cos_theta_prime(std::cos(w.theta_incident())),
          plane_wave(w.is_plane_wave()) {
        if (!plane_wave) {
            src_x = -w.source_distance() * cos_theta_prime;
            src_y = -w.source_distance() * sin_theta_prime;
        }
    }

    // Total optical path source -> (0, y) -> observation point (the plane
    // wave contributes its phase-equivalent y sin th').
    double path(double y) const {
        const double r = std::hypot(obs_x, obs_y - y);
        if (plane_wave) return r + y * sin_theta_prime;
        return r + std::hypot(src_x, y - src_y);
    }
};

}  // namespace detail

// Minimum panels per slit for kirchhoff_amplitude: ten panels per
// oscillation of the kernel phase, where the phase sweeps k times (slit
// width + geometric path variation across the slit); never below 32.
inline long kirchhoff_min_panels(const ApertureSpec& ap, const WaveSpec& w,
                                 const ObservationPoint& obs) {
    const detail::SlitGeometry geo(w, obs);
    long required = 32;
    for (const Slit& s : ap.slits()) {
        double lo = geo.path(s.lower());
        double hi = lo;
        for (int i = 1; i <= 32; ++i) {
            const double y = s.lower() + s.width * static_cast<double>(i) / 32.0;
            const double p = geo.path(y);
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        const double variation = hi - lo;
        required = std::max(required,
                            panels_for_phase(w.k() * (s.width + variation), 32, 10.0));
    }
    return required;
}

// Kirchhoff-type diffraction integral over the slit union,
//   psi(P) = -(i k / 2 pi) Integral f(th, th') e^{i k (r + r0)} / (r r0) dy,
// evaluated by composite Gauss-Legendre quadrature with `panels` panels in
// each slit.  The overall constant is arbitrary (comparisons are made on
// peak-normalized intensities); the local angles th, th' vary across the
// aperture and are recomputed per quadrature node.
inline cdouble kirchhoff_amplitude(const ApertureSpec& ap, const WaveSpec& w, Obliquity variant,
                                   const ObservationPoint& obs, long panels,
                                   Kernel kernel = Kernel::spherical) {
    if (!(obs.distance > 0.0))
        throw spec_error("kirchhoff_amplitude: observation distance must be > 0");
    if (!(std::abs(obs.angle) < pi / 2.0))
        throw spec_error("kirchhoff_amplitude: |observation angle| must be < pi/2");
    const long required = kirchhoff_min_panels(ap, w, obs);
    if (panels < required)
        throw nyquist_error("kirchhoff_amplitude: " + std::to_string(panels) +
                                " panels per slit is below the Nyquist minimum " +
                                std::to_string(required) + " for this geometry",
                            required);

    const detail::SlitGeometry geo(w, obs);
    const double k = w.k();
    const bool cylindrical = kernel == Kernel::cylindrical;
    cdouble sum{};
    for (const Slit& s : ap.slits()) {
        sum += integrate_gl8(
            [&](double y) {
                const double dx = geo.obs_x;
                const double dy = geo.obs_y - y;
                const double r = std::hypot(dx, dy);
                const double cos_t = dx / r;
                double cos_tp = geo.cos_theta_prime;
                double path = r;
                double inv_amp = cylindrical ? std::sqrt(r) : r;
                if (geo.plane_wave) {
                    path += y * geo.sin_theta_prime;
                } else {
                    const double sx = -geo.src_x;
                    const double sy = y - geo.src_y;
                    const double r0 = std::hypot(sx, sy);
                    cos_tp = sx / r0;
                    path += r0;
                    inv_amp *= cylindrical ? std::sqrt(r0) : r0;
                }
                const double f = detail::obliquity_from_cos(variant, cos_t, cos_tp);
                return unit_phasor(k * path) * (f / inv_amp);
            },
            s.lower(), s.upper(), panels);
    }
    return cdouble(0.0, -k / (2.0 * pi)) * sum;
}

// Far-field (Fraunhofer) amplitude: the aperture integral of
// e^{-i k sin(th) y} with the constant chosen as 1/sqrt(2 pi T), which
// makes it coincide with momentum_amplitude at k_y = k sin(th).  Evaluated
// from the antiderivative per slit (difference of edge phasors), with a
// series fallback where that difference would cancel.
inline cdouble fraunhofer_amplitude(const ApertureSpec& ap, double k, double theta) {
    const double k_y = k * std::sin(theta);
    cdouble sum{};
    for (const Slit& s : ap.slits()) {
        const double beta = k_y * s.width / 2.0;
        if (std::abs(beta) < 1e-3) {
            sum += unit_phasor(-k_y * s.center) * (s.width * sinc(beta));
        } else {
            sum += (unit_phasor(-k_y * s.lower()) - unit_phasor(-k_y * s.upper())) /
                   cdouble(0.0, k_y);
        }
    }
    return sum / std::sqrt(2.0 * pi * ap.total_width());
}

}  // namespace slitdiff
