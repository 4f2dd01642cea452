#pragma once

#include <cstdint>

#include "minnaert/types.hpp"

namespace minnaert {

// Spherical Bessel j_n, Neumann y_n and Hankel h_n = j_n + i y_n of complex
// argument. Below |z| < max(1, n/2) the power series is used; above it j_n
// comes from closed forms (n <= 1) or Miller downward recurrence, and h_n
// from upward recurrence seeded by the closed forms of h_0 and h_1.
cplx sph_bessel_j(int n, cplx z);
cplx sph_bessel_y(int n, cplx z);
cplx sph_hankel_h1(int n, cplx z);

// Derivatives use f_n' = f_{n-1} - (n+1)/z f_n, and f_0' = -f_1.
cplx sph_bessel_dj(int n, cplx z);
cplx sph_hankel_dh1(int n, cplx z);

// m!! for odd m >= -1, with (-1)!! = 1. Throws std::domain_error otherwise.
std::int64_t double_factorial(int m);

// Threshold below which the power series is used for order n.
double series_switch_radius(int n);

}  // namespace minnaert
