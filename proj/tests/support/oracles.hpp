#pragma once

// Test-side reference integrators.  Deliberately independent of the
// library's quadrature machinery: adaptive Simpson with interval halving,
// plus a fixed-panel composite Simpson for brute-force overlap integrals.

#include <cmath>
#include <complex>
#include <functional>

#include "slitdiff/aperture.hpp"
#include "slitdiff/math.hpp"

namespace oracle {

inline double adaptive_simpson_step(const std::function<double(double)>& f, double a, double b,
                                    double fa, double fm, double fb, double whole, double tol,
                                    int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int depth = 50) {
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Sine integral by adaptive quadrature of sin(t)/t (own small-argument
// guard so it shares nothing with the implementation under test).
inline double sine_integral(double x, double tol = 1e-13) {
    auto kernel = [](double t) {
        if (std::abs(t) < 1e-8) return 1.0 - t * t / 6.0;
        return std::sin(t) / t;
    };
    if (x == 0.0) return 0.0;
    return adaptive_simpson(kernel, 0.0, x, tol);
}

// Brute-force scattering amplitude: composite Simpson of
// (1/sqrt(2 pi)) e^{-i k_y y} psi(y) over the slit union, `panels` panels
// per slit (panels >= 1e4 makes this a heavy but trustworthy reference).
inline std::complex<double> momentum_amplitude_bruteforce(const slitdiff::ApertureSpec& ap,
                                                          double k_y, long panels = 20000) {
    const double psi = 1.0 / std::sqrt(ap.total_width());
    std::complex<double> total{};
    for (const auto& s : ap.slits()) {
        const double h = s.width / static_cast<double>(panels);
        std::complex<double> acc{};
        for (long i = 0; i < panels; ++i) {
            const double y0 = s.lower() + h * static_cast<double>(i);
            const double y1 = y0 + h;
            const double ym = 0.5 * (y0 + y1);
            auto val = [&](double y) {
                return std::complex<double>(std::cos(k_y * y), -std::sin(k_y * y));
            };
            acc += (val(y0) + 4.0 * val(ym) + val(y1)) * (h / 6.0);
        }
        total += acc;
    }
    return total * (psi / std::sqrt(2.0 * slitdiff::pi));
}

}  // namespace oracle
