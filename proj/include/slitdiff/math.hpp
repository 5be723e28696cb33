#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace slitdiff {

inline constexpr double pi = std::numbers::pi;

using cdouble = std::complex<double>;

// sin(x)/x with the removable singularity filled in by its Taylor series.
// Four terms keep the relative error below 1e-16 for |x| < 1e-4; above the
// switch point the direct quotient is free of cancellation.
inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
    }
    return std::sin(x) / x;
}

inline double deg_to_rad(double deg) { return deg * (pi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / pi); }

// exp(i*phase) without the hypot work of std::polar.
inline cdouble unit_phasor(double phase) {
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace slitdiff
