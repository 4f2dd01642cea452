#pragma once

#include <vector>

#include "minnaert/fields.hpp"
#include "minnaert/medium.hpp"
#include "minnaert/types.hpp"

namespace minnaert {

struct Pulse {
    double c1 = 1.0;  // support length (s)
};

// exp(-1/(t (C1 - t))) on (0, C1), scaled to 1 at t = C1/2; zero elsewhere.
double pulse_hat(double t, const Pulse& pulse);

// f(omega) = (1/2pi) int_0^C1 pulse_hat(t) e^{i omega t} dt, adaptive Gauss-Kronrod.
// Throws std::runtime_error when the tolerance is not met.
cplx pulse_ft(cplx omega, const Pulse& pulse, double tol = 1e-13);

struct TimeWindows {
    double t_minus = 0.0;
    double t_plus = 0.0;
};

TimeWindows time_windows(const ScatterScene& scene, const NondimMedium& nd, const Vec3& x);

// rho from the scene, or the resonance radius when the scene leaves it at 0.
double band_limit(const ScatterScene& scene, const NondimMedium& nd);

struct InverseFtOptions {
    int panels = 24;        // per half-band, initial
    int order = 16;         // Gauss points per panel
    double rel_tol = 1e-7;  // successive-doubling criterion
    int max_doublings = 6;
    unsigned threads = 1;
    Fc2Variant variant = Fc2Variant::Upper;
};

struct InverseFtResult {
    std::vector<CVec3> values;  // P_rho at each requested time
    int panels = 0;             // per half-band at convergence
    double rel_change = 0.0;    // last successive difference
    bool converged = false;
};

// P_rho[u_sca](x, t) = int_{-rho}^{rho} u_sca(x, omega) e^{-i omega t} d omega.
// The band is split at 0; the frequency samples are built once per level and reused for all t.
InverseFtResult truncated_inverse_ft(const ScatterScene& scene, const NondimMedium& nd, const Vec3& x,
                                     const std::vector<double>& times, const InverseFtOptions& opts = {});

struct ResidueMode {
    double omega0_imag = 0.0;  // Omega_0'' < 0
    double t_plus = 0.0;
    cplx amplitude;        // C_0(u_in, epsilon) in closed form, includes C_epsilon; equals 2 pi i Res
    cplx bracket;          // the four inner products over the bubble boundary
    double c_epsilon = 0.0;
    CVec3 e0{};            // S^{i Omega_0'' tau / c_b}[Y_breve_0^0 nu](x)
    CVec3 E0{};            // e0 exp(Omega_0'' tau |x - z| / (c_b c_s))
};

ResidueMode residue_mode(const ScatterScene& scene, const NondimMedium& nd, const Vec3& x);

// C_0 E_0(x) e^{Omega_0'' (t - t_plus)} in closed form (2 pi i times the residue).
CVec3 residue_closed_form(const ResidueMode& mode, double t);

// Approximation of P_rho for t >= t_plus. Closing the band [-rho, rho] in the lower half
// plane runs clockwise, so this is -C_0 E_0(x) e^{Omega_0'' (t - t_plus)}. Rejects t < t_plus.
CVec3 residue_approximation(const ScatterScene& scene, const NondimMedium& nd, const Vec3& x, double t);
CVec3 residue_approximation(const ResidueMode& mode, double t);

struct ResidueOracle {
    CVec3 contour{};      // contour integral of Xi_0^0 e^{-i Omega t} counter-clockwise
    CVec3 closed_form{};  // residue_approximation at the same t
    double rel_err = 0.0;
    double higher_modes_max = 0.0;  // largest |contour integral| over the n >= 1 terms
    double higher_modes_rel = 0.0;  // the same relative to |closed_form|
    double radius = 0.0;
};

// Trapezoid rule on the circle |Omega - i Omega_0''| = radius. radius <= 0 selects min(0.1, |Omega_0''|/4).
ResidueOracle residue_oracle(const ScatterScene& scene, const NondimMedium& nd, const Vec3& x, double t,
                             double radius = 0.0, int nodes = 256);

}  // namespace minnaert
