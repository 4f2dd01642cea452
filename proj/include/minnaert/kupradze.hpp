#pragma once

#include <array>

#include "minnaert/medium.hpp"
#include "minnaert/types.hpp"

namespace minnaert {

// Gamma^k(x) = P(r) x x^T + Q(r) I, with r = |x|. dP and dQ are radial derivatives.
struct RadialKernel {
    cplx P, Q, dP, dQ;
};

// Uses the closed exponential forms when |k| r / c_s >= 0.5 and the Taylor
// series in k r below that, which also covers k = 0 (the Kelvin matrix).
RadialKernel kupradze_radial(double r, cplx k, const NondimMedium& nd);

CMat3 kupradze(const Vec3& x, cplx k, const NondimMedium& nd);
CMat3 kelvin(const Vec3& x, const NondimMedium& nd);

// d/dx_ell of Gamma^k(x), ell in {0, 1, 2}.
CMat3 kupradze_grad(int ell, const Vec3& x, cplx k, const NondimMedium& nd);
std::array<CMat3, 3> kupradze_grad_all(const Vec3& x, cplx k, const NondimMedium& nd);

// sum_i d_i Gamma_ij(x) p_j.
cplx kupradze_divergence(const Vec3& x, cplx k, const NondimMedium& nd, const Vec3& p);

}  // namespace minnaert
