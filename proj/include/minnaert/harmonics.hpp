#pragma once

#include <vector>

#include "minnaert/types.hpp"

namespace minnaert {

inline constexpr int kMaxHarmonicOrder = 8;

// Real orthonormal spherical harmonic on the unit sphere, without the Condon-Shortley phase.
// m > 0 pairs with sqrt(2) cos(m phi), m < 0 with sqrt(2) sin(|m| phi).
double real_harmonic(int n, int m, const Vec3& unit);

// Surface gradient of real_harmonic; tangent to the sphere.
Vec3 surface_gradient(int n, int m, const Vec3& unit);

enum class VectorFamily { I, T, N };

// I_n^m = grad_S Y_{n+1}^m + (n+1) Y_{n+1}^m nu
// T_n^m = grad_S Y_{n+1}^m x nu
// N_n^m = -grad_S Y_{n-1}^m + n Y_{n-1}^m nu
Vec3 vector_harmonic(VectorFamily family, int n, int m, const Vec3& unit);

struct Mode {
    int n = 0;
    int m = 0;
};

// (0,0), (1,-1), (1,0), (1,1), ... up to order n_max.
std::vector<Mode> modes_up_to(int n_max);

}  // namespace minnaert
