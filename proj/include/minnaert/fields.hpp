#pragma once

#include <vector>

#include "minnaert/harmonics.hpp"
#include "minnaert/medium.hpp"
#include "minnaert/spectra.hpp"
#include "minnaert/types.hpp"

namespace minnaert {

struct ScatterScene {
    Vec3 z{0.0, 0.0, 0.0};  // bubble centre (m)
    Vec3 s{1.0, 0.0, 0.0};  // point source (m)
    Vec3 p{1.0, 0.0, 0.0};  // nondimensional polarization
    double epsilon = 1e-2;  // bubble radius (m)
    int n_trunc = 4;
    double c1 = 1.0;   // pulse support length (s)
    double rho = 0.0;  // band limit (rad/s); 0 selects the resonance radius
};

void validate(const ScatterScene& scene);

// Wavenumber of the Kupradze kernel in metres: omega tau / c_b.
cplx kupradze_wavenumber(const NondimMedium& nd, cplx omega);

// u_in(x) = -omega^2 f Gamma(x - s) p, with Gamma at wavenumber omega tau / c_b.
CVec3 incident_field(const ScatterScene& scene, const NondimMedium& nd, cplx omega, cplx f, const Vec3& x);

// Geometric inner products over the unit sphere that enter the forcing, per mode:
//   t1 = <nu . (Gamma p), Y>          t2 = <sum_j y_j nu . (d_j Gamma p), Y>
//   t3 = <sum_ij d_i Gamma_ij p_j, Y> t4 = <nu . ((D + D^T) nu), Y>
// with Gamma and its gradients taken at z - s.
struct ForcingBlock {
    Mode mode;
    cplx t1, t2, t3, t4;
};

std::vector<ForcingBlock> forcing_blocks(const ScatterScene& scene, const NondimMedium& nd, cplx omega);

struct ModeCoefficient {
    Mode mode;
    cplx value;
};

// <F, Y_n^m> over the unit sphere for the truncated forcing. omega must be nonzero.
std::vector<ModeCoefficient> forcing_coefficients(const ScatterScene& scene, const NondimMedium& nd, cplx omega,
                                                  cplx f);

// omega <F, Y_0^0> / k^2, regular at omega = 0.
cplx forcing0_reduced(const ForcingBlock& b0, const ScatterScene& scene, const NondimMedium& nd, cplx omega, cplx f);

// omega lambda_0 / k^2 = (omega + i gamma) g(k1^2) rho_0(k tau) + omega delta tau^2 eta_0(k tau).
cplx symbol0_reduced(const NondimMedium& nd, cplx omega, double epsilon);

// S^k over the unit sphere applied to Y_n^m nu, at X (|X| > 1), for every mode up to n_max.
std::vector<CVec3> unit_single_layer_modes(int n_max, cplx k, const NondimMedium& nd, const Vec3& X);

// S^{k tilde tau} over the bubble boundary applied to Y_breve nu, at x (metres), for every mode.
std::vector<CVec3> bubble_single_layer_modes(const ScatterScene& scene, const NondimMedium& nd, cplx omega,
                                             const Vec3& x);

struct ModalTerm {
    Mode mode;
    cplx forcing;  // <F, Y> over the unit sphere
    cplx symbol;   // lambda_n(k)
    cplx ratio;    // forcing / symbol, with the k^2 cancellation applied at n = 0
    CVec3 value;   // ratio times the single layer
};

struct ModalField {
    std::vector<ModalTerm> terms;
    CVec3 total{};
};

// Truncated modal scattered field at an exterior point x (metres). f is the pulse transform at omega.
ModalField modal_scattered_field(const ScatterScene& scene, const NondimMedium& nd, cplx omega, cplx f,
                                 const Vec3& x, Fc2Variant variant = Fc2Variant::Upper);

}  // namespace minnaert
