#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "slitdiff/errors.hpp"
#include "slitdiff/math.hpp"

namespace slitdiff {

// Discrete Huygens construction: 2n+1 wavelet sources spread evenly over a
// slit of width a, observed at infinity so rays are parallel.
struct HuygensConfig {
    double a;
    double k;
    long n;

    HuygensConfig(double a_, double k_, long n_) : a(a_), k(k_), n(n_) {
        if (!(a > 0.0)) throw spec_error("HuygensConfig: slit width a must be > 0");
        if (!(k > 0.0)) throw spec_error("HuygensConfig: wavenumber k must be > 0");
        if (n < 1) throw spec_error("HuygensConfig: source count parameter n must be >= 1");
    }
};

// Sum of the 2n+1 wavelet phasors: sum_{j=-n..n} e^{i a_j sin th} * da with
// a_j = k (a/2) j / n and da = k a / (2n).  Accumulated in fixed j order,
// so the result is deterministic; at theta = 0 it is purely real.
inline cdouble huygens_sum(const HuygensConfig& cfg, double theta) {
    const double s = std::sin(theta);
    const double alpha_max = cfg.k * cfg.a / 2.0;
    const double d_alpha = alpha_max / static_cast<double>(cfg.n);
    cdouble acc{};
    for (long j = -cfg.n; j <= cfg.n; ++j) {
        const double alpha = alpha_max * (static_cast<double>(j) / static_cast<double>(cfg.n));
        acc += unit_phasor(alpha * s);
    }
    return acc * d_alpha;
}

// Continuum limit of the wavelet sum: 2 sin((k a / 2) sin th) / sin th,
// with the theta -> 0 limit k a.
inline double huygens_closed_form(double a, double k, double theta) {
    if (!(a > 0.0)) throw spec_error("huygens_closed_form: slit width a must be > 0");
    if (!(k > 0.0)) throw spec_error("huygens_closed_form: wavenumber k must be > 0");
    return k * a * sinc(k * a / 2.0 * std::sin(theta));
}

struct ConvergencePoint {
    long n;
    double relative_error;
};

// Relative error of the discrete sum against the continuum limit for each
// source count.  The closed form must not vanish at theta, or the relative
// error is undefined.
inline std::vector<ConvergencePoint> huygens_convergence(double a, double k,
                                                         std::span<const long> ns, double theta) {
    if (ns.empty()) throw spec_error("huygens_convergence: empty source-count list");
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 1) throw spec_error("huygens_convergence: source counts must be >= 1");
        if (i > 0 && !(ns[i] > ns[i - 1]))
            throw spec_error("huygens_convergence: source counts must be strictly increasing");
    }
    const double closed = huygens_closed_form(a, k, theta);
    if (std::abs(closed) < 1e-12 * k * a)
        throw spec_error("huygens_convergence: the closed form vanishes at theta=" +
                         std::to_string(theta) + "; pick a different angle");
    std::vector<ConvergencePoint> out;
    out.reserve(ns.size());
    for (long n : ns) {
        const cdouble sum = huygens_sum(HuygensConfig(a, k, n), theta);
        out.push_back({n, std::abs(sum - closed) / std::abs(closed)});
    }
    return out;
}

}  // namespace slitdiff
