#pragma once

#include <cmath>

namespace slitdiff {

namespace detail {

// Horner evaluation of a polynomial in ascending-coefficient order.
template <int N>
inline double poly_eval(const double (&c)[N], double x) {
    double s = c[N - 1];
    for (int i = N - 2; i >= 0; --i) s = s * x + c[i];
    return s;
}

}  // namespace detail

// Sine integral Si(x) = Integral_0^x sin(t)/t dt.
//
// |x| <= 4: the everywhere-convergent power series
//     Si(x) = sum (-1)^n x^(2n+1) / ((2n+1) (2n+1)!),
// whose largest term at x = 4 is ~4, so cancellation costs well under one
// digit and ~15 terms reach full double precision.
//
// |x| > 4: Si(x) = pi/2 - f(x) cos(x) - g(x) sin(x) with the auxiliary
// functions f ~ 1/x, g ~ 1/x^2 evaluated by rational fits in y = 1/x^2
// (the published Chebyshev-Pade fits, as tabulated in the Wikipedia
// article on trigonometric integrals; absolute error < 1e-16 for x >= 4).
//
// Odd by construction: Si(-x) = -Si(x) exactly.
inline double sine_integral(double x) {
    const double ax = std::abs(x);
    if (ax <= 4.0) {
        const double x2 = x * x;
        double term = x;
        double sum = 0.0;
        for (int n = 1; n < 40; n += 2) {
            sum += term / static_cast<double>(n);
            term *= -x2 / static_cast<double>((n + 1) * (n + 2));
            if (std::abs(term) < 1e-18) break;
        }
        return sum;
    }

    static constexpr double fp[11] = {
        1.0,                       7.44437068161936700618e2,  1.96396372895146869801e5,
        2.37750310125431834034e7,  1.43073403821274636888e9,  4.33736238870432522765e10,
        6.40533830574022022911e11, 4.20968180571076940208e12, 1.00795182980368574617e13,
        4.94816688199951963482e12, -4.94701168645415959931e11};
    static constexpr double fq[10] = {
        1.0,                       7.46437068161927678031e2,  1.97865247031583951450e5,
        2.41535670165126845144e7,  1.47478952192985464958e9,  4.58595115847765779830e10,
        7.08501308149515401563e11, 5.06084464593475076774e12, 1.43468549171581016479e13,
        1.11535493509914254097e13};
    static constexpr double gp[11] = {
        1.0,                       8.13595201151686150e2,     2.35239181626478200e5,
        3.12557570795778731e7,     2.06297595146763354e9,     6.83052205423625007e10,
        1.09049528450362786e12,    7.57664583257834349e12,    1.81004487464664575e13,
        6.43291613143049485e12,    -1.36517137670871689e12};
    static constexpr double gq[10] = {
        1.0,                       8.19595201151451564e2,     2.40036752835578777e5,
        3.26026661647090822e7,     2.23355543278099360e9,     7.87465017341829930e10,
        1.39866710696414565e12,    1.17164723371736605e13,    4.01839087307656620e13,
        3.99653257887490811e13};

    const double y = 1.0 / (ax * ax);
    const double f = detail::poly_eval(fp, y) / (detail::poly_eval(fq, y) * ax);
    const double g = y * detail::poly_eval(gp, y) / detail::poly_eval(gq, y);
    const double si =
        1.5707963267948966 - f * std::cos(ax) - g * std::sin(ax);
    return x > 0.0 ? si : -si;
}

}  // namespace slitdiff
