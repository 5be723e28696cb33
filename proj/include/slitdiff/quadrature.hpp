#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <type_traits>

#include "slitdiff/math.hpp"

namespace slitdiff {

namespace detail {

// 8-point Gauss-Legendre rule on [-1, 1]; exact through degree 15.
inline constexpr std::array<double, 8> gl8_nodes = {
    -0.96028985649753623168, -0.79666647741362673959,
    -0.52553240991632898582, -0.18343464249564980494,
     0.18343464249564980494,  0.52553240991632898582,
     0.79666647741362673959,  0.96028985649753623168};

inline constexpr std::array<double, 8> gl8_weights = {
    0.10122853629037625915, 0.22238103445337447054,
    0.31370664587788728734, 0.36268378337836198297,
    0.36268378337836198297, 0.31370664587788728734,
    0.22238103445337447054, 0.10122853629037625915};

}  // namespace detail

// Composite quadrature of f over [a, b]: `panels` equal panels with the
// 8-point Gauss-Legendre rule in each.  Panels are accumulated left to
// right and nodes in index order, so the value never depends on how the
// caller schedules surrounding work.
template <class F>
auto integrate_gl8(F&& f, double a, double b, long panels) {
    using R = std::invoke_result_t<F&, double>;
    const double h = (b - a) / static_cast<double>(panels);
    R total{};
    for (long p = 0; p < panels; ++p) {
        const double lo = a + h * static_cast<double>(p);
        R acc{};
        for (int i = 0; i < 8; ++i) {
            const double x = lo + (detail::gl8_nodes[i] + 1.0) * (h / 2.0);
            acc += f(x) * detail::gl8_weights[i];
        }
        total += acc * (h / 2.0);
    }
    return total;
}

// Panel count that places `per_period` panels in every 2*pi of accumulated
// phase.  `phase_span` is the total phase swept by the integrand's kernel
// across the interval.
inline long panels_for_phase(double phase_span, long minimum = 16,
                             double per_period = 10.0) {
    const double periods = std::abs(phase_span) / (2.0 * pi);
    const double need = std::ceil(per_period * periods);
    return std::max(minimum, static_cast<long>(need));
}

}  // namespace slitdiff
