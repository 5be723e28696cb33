#pragma once

#include <cmath>
#include <complex>

#include "slitdiff/aperture.hpp"
#include "slitdiff/errors.hpp"
#include "slitdiff/math.hpp"
#include "slitdiff/quadrature.hpp"

namespace slitdiff {

// Momentum-space amplitude <k_y|psi> of the top-hat aperture wavefunction:
// (1/sqrt(2 pi)) Integral e^{-i k_y y} psi(y) dy in closed form.  Each slit
// of width w centered at c contributes e^{-i k_y c} * w * sinc(k_y w / 2);
// the overall factor 1/sqrt(2 pi T) (T = total width) makes |.|^2 a
// probability density over k_y.  Finite everywhere, including k_y = 0.
inline cdouble momentum_amplitude(const ApertureSpec& ap, double k_y) {
    cdouble sum{};
    for (const Slit& s : ap.slits())
        sum += unit_phasor(-k_y * s.center) * (s.width * sinc(k_y * s.width / 2.0));
    return sum / std::sqrt(2.0 * pi * ap.total_width());
}

// Single centered slit of width a: P(k_y) = (a / 2 pi) (sin(alpha)/alpha)^2
// with alpha = a k_y / 2.  The alpha -> 0 limit is a / 2 pi.
inline double single_slit_probability(double a, double k_y) {
    if (!(a > 0.0)) throw spec_error("single_slit_probability: width a must be > 0");
    const double s = sinc(a * k_y / 2.0);
    return a / (2.0 * pi) * s * s;
}

// Two slits of width a centered at +-d/2:
// P(k_y) = (a / pi) cos^2(k_y d / 2) (sin(alpha)/alpha)^2.
inline double double_slit_probability(double a, double d, double k_y) {
    if (!(a > 0.0)) throw spec_error("double_slit_probability: width a must be > 0");
    if (!(d > a))
        throw spec_error("double_slit_probability: slits overlap; separation d=" +
                         std::to_string(d) + " must exceed width a=" + std::to_string(a));
    const double fringe = std::cos(k_y * d / 2.0);
    const double s = sinc(a * k_y / 2.0);
    return a / pi * fringe * fringe * s * s;
}

// Independent check of the closed forms: composite Gauss-Legendre quadrature
// of the overlap integral itself, `panels` panels in each slit.
inline cdouble momentum_amplitude_numeric(const ApertureSpec& ap, double k_y, long panels) {
    if (panels < 2)
        throw spec_error("momentum_amplitude_numeric: need at least 2 panels per slit");
    const double psi = 1.0 / std::sqrt(ap.total_width());
    cdouble sum{};
    for (const Slit& s : ap.slits())
        sum += integrate_gl8([&](double y) { return unit_phasor(-k_y * y) * psi; },
                             s.lower(), s.upper(), panels);
    return sum / std::sqrt(2.0 * pi);
}

// Born-rule normalization check: Integral |<k_y|psi>|^2 dk_y over the whole
// line, split into a quadrature over |k_y| <= cutoff and an analytic bound
// on the rest.  The tail uses |w sinc(k_y w/2)| <= 2/|k_y| per slit, so with
// n slits  |amp|^2 <= (2n)^2 / (2 pi T k_y^2)  and the mass beyond the
// cutoff K is at most 4 n^2 / (pi T K).  The sinc^2 tail decays like 1/k^2,
// so a plain cutoff without the bound would silently drop ~1/K of mass.
struct NormalizationCheck {
    double integral;    // quadrature over |k_y| <= cutoff
    double tail_bound;  // analytic bound on the remaining mass
    double cutoff;
};

inline NormalizationCheck born_normalization(const ApertureSpec& ap,
                                             double tail_bound_target = 1e-6) {
    if (!(tail_bound_target > 0.0))
        throw spec_error("born_normalization: tail bound target must be > 0");
    const double n = static_cast<double>(ap.slits().size());
    const double cutoff = 4.0 * n * n / (pi * ap.total_width() * tail_bound_target);
    // |amp|^2 carries spatial frequencies up to the aperture span; 4 panels
    // per oscillation of GL8 keeps the quadrature error near 1e-15 relative.
    const long panels = panels_for_phase(cutoff * ap.span(), 64, 4.0);
    const double integral =
        2.0 * integrate_gl8([&](double k) { return std::norm(momentum_amplitude(ap, k)); },
                            0.0, cutoff, panels);
    const double tail = 4.0 * n * n / (pi * ap.total_width() * cutoff);
    return NormalizationCheck{integral, tail, cutoff};
}

}  // namespace slitdiff
