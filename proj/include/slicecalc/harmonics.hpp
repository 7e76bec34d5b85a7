#pragma once

#include <array>

#include "slicecalc/diff_ops.hpp"

namespace slicecalc {

// Point of R^4, read as a paravector of R_{0,3} or as a quaternion.
using Point4 = std::array<double, 4>;

MvD paravector3(const Point4& x);
MvD quaternion4(const Point4& x);

// Solid zonal harmonic of degree m with pole already rotated to 1:
// (m+1) * (y^{m+1})'_s, a real scalar on cone elements.
MvD zonal_full(int m, const MvD& y);

// Zonal harmonic of degree m with pole a on the unit sphere, via the rotation
// y = x a^c. Requires |a| = 1.
double zonal(int m, const Point4& x, const Point4& a);
double zonal_quaternion(int m, const Point4& x, const Point4& a);

// Gegenbauer polynomial C^{(1)}_k by its three-term recurrence
// (the classical restriction of the degree-(k) zonal harmonic, up to k+1).
double gegenbauer_c1(int k, double t);

// Poisson kernel (1 - |x|^2) / |x - a|^4 of the unit ball of R^4.
double poisson(const Point4& x, const Point4& a);

// Kelvin transform |x|^{-2} f(x / |x|^2) on fields over R^4.
EvaluableField kelvin(const EvaluableField& f);

// Koebe function (1 - x)^{-2} x on the quadratic cone.
MvD koebe(const MvD& x);
SliceFunction koebe_slice_function(int n = 3);
double koebe_spherical_derivative(const MvD& x);

// x^m rebuilt from two consecutive zonal harmonics with pole 1.
MvD power_from_zonal(int m, const MvD& x);

// sum_{m > m_max} (m+1)^2 rho^m, the tail envelope of the zonal expansion of
// the Poisson kernel at radius rho < 1.
double zonal_tail_bound(int m_max, double rho);

} // namespace slicecalc
