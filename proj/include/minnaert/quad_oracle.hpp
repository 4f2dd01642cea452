#pragma once

#include <string>
#include <vector>

#include "minnaert/medium.hpp"
#include "minnaert/spectra.hpp"
#include "minnaert/types.hpp"

namespace minnaert {

// Brute-force surface quadrature on the unit sphere, target point e3, m = 0.
// The substitution u = sin(theta/2) gives |e3 - y| = 2u and sin(theta) dtheta = 4u du,
// which removes the weak singularity of the single layer kernels.
struct OracleConfig {
    int n_theta = 192;          // Gauss-Legendre nodes in u
    int n_phi = 256;            // trapezoid nodes in phi for the two-dimensional path
    bool azimuthal_fast_path = true;
    int panel_order = 32;       // per-panel order for the graded offset integrals
    double h0 = 1e-2;           // largest offset used for the traction limits
    int n_offsets = 4;          // offsets h0, h0/2, ..., extrapolated to h = 0
};

cplx oracle_helmholtz_single_layer(int n, cplx k, const OracleConfig& cfg = {});

struct NeumannPoincareOracle {
    cplx direct;        // on-surface kernel -e^{ikr}(ikr - 1)/(8 pi r)
    cplx from_limits;   // average of the exterior and interior normal derivatives
    cplx jump;          // exterior minus interior, should be 1
};

NeumannPoincareOracle oracle_neumann_poincare(int n, cplx k, const OracleConfig& cfg = {});

struct ElasticOracle {
    cplx eta;           // nu . S[Y nu] on the surface
    cplx rho;           // exterior traction limit, nu . (1/2 + K*)[Y nu]
    cplx rho_interior;  // interior traction limit, nu . (-1/2 + K*)[Y nu]
    cplx jump;          // rho - rho_interior, should be 1
};

ElasticOracle oracle_elastic_layers(int n, cplx k, const NondimMedium& nd, const OracleConfig& cfg = {});

// Normal derivative of the Helmholtz single layer of Y_n^0 at (1 + h) e3, divided by Y_n^0(e3).
cplx helmholtz_offset_normal_derivative(int n, cplx k, double h, const OracleConfig& cfg = {});
// e3 . traction of the elastic single layer of Y_n^0 nu at (1 + h) e3, divided by Y_n^0(e3).
cplx elastic_offset_traction(int n, cplx k, const NondimMedium& nd, double h, const OracleConfig& cfg = {});

// Polynomial extrapolation of samples (h_i, v_i) to h = 0 (Neville).
cplx extrapolate_to_zero(const std::vector<double>& h, const std::vector<cplx>& v);

struct OracleReport {
    std::string family;
    int n = 0;
    cplx k;
    cplx spectral_value;
    cplx quadrature_value;
    double rel_err = 0.0;
};

double relative_error(cplx spectral, cplx quadrature);

// Runs xi, zeta, eta and rho for every (n, k) pair. eta_scale multiplies the
// spectral eta_0 before comparison; it exists so tests can inject a perturbation.
std::vector<OracleReport> run_oracle_suite(const std::vector<int>& orders, const std::vector<cplx>& ks,
                                           const NondimMedium& nd, const OracleConfig& cfg = {},
                                           Fc2Variant variant = Fc2Variant::Upper, double eta_scale = 1.0,
                                           unsigned threads = 1);

}  // namespace minnaert
