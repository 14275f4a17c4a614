#pragma once

#include <cmath>
#include <cstdlib>

#include "mimosel/errors.hpp"

namespace mimosel {

namespace detail {

// 15-point Gauss-Legendre rule on [-1, 1].
inline constexpr double kGl15Nodes[15] = {
    -0.98799251802048542848956571858661, -0.93727339240070590430775894771021,
    -0.84820658341042721620064832077422, -0.72441773136017004741618605461394,
    -0.57097217260853884753722673725391, -0.39415134707756336989720737098573,
    -0.20119409399743452230062830339460, 0.0,
    0.20119409399743452230062830339460,  0.39415134707756336989720737098573,
    0.57097217260853884753722673725391,  0.72441773136017004741618605461394,
    0.84820658341042721620064832077422,  0.93727339240070590430775894771021,
    0.98799251802048542848956571858661};

inline constexpr double kGl15Weights[15] = {
    0.03075324199611726835462839357720, 0.07036604748810812470926741645066,
    0.10715922046717193501186954668587, 0.13957067792615431444780479451103,
    0.16626920581699393355320086048121, 0.18616100001556221102680056186642,
    0.19843148532711157645611832644384, 0.20257824192556127288062019996752,
    0.19843148532711157645611832644384, 0.18616100001556221102680056186642,
    0.16626920581699393355320086048121, 0.13957067792615431444780479451103,
    0.10715922046717193501186954668587, 0.07036604748810812470926741645066,
    0.03075324199611726835462839357720};

template <class F>
double gl15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 15; ++i) acc += kGl15Weights[i] * f(mid + half * kGl15Nodes[i]);
    return acc * half;
}

template <class F>
double adapt(F&& f, double a, double b, double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl15(f, a, mid);
    const double right = gl15(f, mid, b);
    const double refined = left + right;
    if (std::abs(refined - whole) <= tol || depth >= 48) return refined;
    return adapt(f, a, mid, left, 0.5 * tol, depth + 1) +
           adapt(f, mid, b, right, 0.5 * tol, depth + 1);
}

} // namespace detail

/// Adaptive Gauss-Legendre quadrature: 15-point panels with recursive
/// bisection until the panel refinement changes by less than the local
/// tolerance share. initial_panels splits [a, b] uniformly up front so
/// narrow features (sharp order-statistic densities) cannot hide inside a
/// single coarse panel. The effective absolute tolerance is
/// max(abs_tol, rel_tol * |first estimate|).
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-8, double rel_tol = 0.0,
                 int initial_panels = 1) {
    if (!(b > a)) return 0.0;
    if (initial_panels < 1) initial_panels = 1;

    const double width = (b - a) / initial_panels;
    double coarse = 0.0;
    for (int p = 0; p < initial_panels; ++p)
        coarse += detail::gl15(f, a + p * width, a + (p + 1) * width);

    const double tol = std::max(abs_tol, rel_tol * std::abs(coarse));
    double total = 0.0;
    for (int p = 0; p < initial_panels; ++p) {
        const double lo = a + p * width;
        const double hi = a + (p + 1) * width;
        total += detail::adapt(f, lo, hi, detail::gl15(f, lo, hi), tol / initial_panels, 0);
    }
    return total;
}

} // namespace mimosel
