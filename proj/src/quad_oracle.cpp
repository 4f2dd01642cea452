#include "minnaert/quad_oracle.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "minnaert/kupradze.hpp"
#include "minnaert/parallel.hpp"
#include "minnaert/quadrature.hpp"

namespace minnaert {

namespace {

using AxialIntegrand = std::function<cplx(double u)>;

// Integral over the sphere of an integrand depending on theta only, written in u = sin(theta/2).
// The u-integrand already includes the 4u du measure; the azimuth contributes 2 pi.
cplx axial_integral(const AxialIntegrand& f, const OracleConfig& cfg) {
    const GaussRule& g = gauss_legendre(cfg.n_theta);
    const cplx s = gauss_panel(g, 0.0, 1.0, f);
    if (cfg.azimuthal_fast_path) return 2.0 * kPi * s;
    // Explicit trapezoid sum over phi; the integrand does not depend on phi.
    cplx acc = 0.0;
    const double dphi = 2.0 * kPi / cfg.n_phi;
    for (int j = 0; j < cfg.n_phi; ++j) acc += s * dphi;
    return acc;
}

// Same, but on panels graded geometrically towards u ~ h/2 where the offset kernel peaks.
cplx axial_integral_graded(const AxialIntegrand& f, double h, const OracleConfig& cfg) {
    const GaussRule& g = gauss_legendre(cfg.panel_order);
    std::vector<double> breaks{0.0};
    double b = h / 8.0;
    while (b < 1.0) {
        breaks.push_back(b);
        b *= 2.0;
    }
    breaks.push_back(1.0);
    cplx s = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) s += gauss_panel(g, breaks[i], breaks[i + 1], f);
    return 2.0 * kPi * s;
}

std::vector<double> offsets(const OracleConfig& cfg) {
    std::vector<double> hs;
    double h = cfg.h0;
    for (int i = 0; i < cfg.n_offsets; ++i, h *= 0.5) hs.push_back(h);
    return hs;
}

}  // namespace

cplx oracle_helmholtz_single_layer(int n, cplx k, const OracleConfig& cfg) {
    // G^k(r) = -e^{ikr}/(4 pi r), r = 2u, measure 4u du; divided by Y_n^0(e3).
    auto f = [n, k](double u) -> cplx {
        const double r = 2.0 * u;
        return -std::exp(kI * k * r) / (4.0 * kPi * r) * std::legendre(n, 1.0 - 2.0 * u * u) * 4.0 * u;
    };
    return axial_integral(f, cfg);
}

cplx helmholtz_offset_normal_derivative(int n, cplx k, double h, const OracleConfig& cfg) {
    const double a = 1.0 + h;
    auto f = [=](double u) -> cplx {
        const double ct = 1.0 - 2.0 * u * u;
        const double R = std::sqrt(h * h + 4.0 * a * u * u);
        const cplx dG = -std::exp(kI * k * R) * (kI * k * R - 1.0) / (4.0 * kPi * R * R * R);
        return dG * (a - ct) * std::legendre(n, ct) * 4.0 * u;
    };
    return axial_integral_graded(f, std::abs(h), cfg);
}

NeumannPoincareOracle oracle_neumann_poincare(int n, cplx k, const OracleConfig& cfg) {
    NeumannPoincareOracle out;
    auto f = [n, k](double u) -> cplx {
        const double r = 2.0 * u;
        return -std::exp(kI * k * r) * (kI * k * r - 1.0) / (8.0 * kPi * r) * std::legendre(n, 1.0 - 2.0 * u * u) *
               4.0 * u;
    };
    out.direct = axial_integral(f, cfg);
    std::vector<double> hs = offsets(cfg);
    std::vector<cplx> plus, minus;
    for (double h : hs) {
        plus.push_back(helmholtz_offset_normal_derivative(n, k, h, cfg));
        minus.push_back(helmholtz_offset_normal_derivative(n, k, -h, cfg));
    }
    const cplx vp = extrapolate_to_zero(hs, plus);
    const cplx vm = extrapolate_to_zero(hs, minus);
    out.from_limits = 0.5 * (vp + vm);
    out.jump = vp - vm;
    return out;
}

cplx elastic_offset_traction(int n, cplx k, const NondimMedium& nd, double h, const OracleConfig& cfg) {
    const double a = 1.0 + h;
    auto f = [=, &nd](double u) -> cplx {
        const double ct = 1.0 - 2.0 * u * u;
        const double R = std::sqrt(h * h + 4.0 * a * u * u);
        const RadialKernel rk = kupradze_radial(R, k, nd);
        const double Xy = a * ct - 1.0;  // (x - y) . y
        const double X3 = a - ct;
        const cplx div = (rk.dP * R + 4.0 * rk.P + rk.dQ / R) * Xy;
        const cplx d33 = rk.dP * X3 * X3 / R * Xy + rk.P * (Xy + X3 * ct) + rk.dQ * X3 / R * ct;
        return (nd.lambda * div + 2.0 * nd.mu * d33) * std::legendre(n, ct) * 4.0 * u;
    };
    return axial_integral_graded(f, std::abs(h), cfg);
}

ElasticOracle oracle_elastic_layers(int n, cplx k, const NondimMedium& nd, const OracleConfig& cfg) {
    ElasticOracle out;
    // e3^T Gamma(e3 - y) y = Q cos(theta) + P (1 - cos(theta)) (cos(theta) - 1)
    auto f = [&](double u) -> cplx {
        if (u == 0.0) return 0.0;
        const double ct = 1.0 - 2.0 * u * u;
        const RadialKernel rk = kupradze_radial(2.0 * u, k, nd);
        return (rk.Q * ct - rk.P * (1.0 - ct) * (1.0 - ct)) * std::legendre(n, ct) * 4.0 * u;
    };
    out.eta = axial_integral(f, cfg);
    std::vector<double> hs = offsets(cfg);
    std::vector<cplx> plus, minus;
    for (double h : hs) {
        plus.push_back(elastic_offset_traction(n, k, nd, h, cfg));
        minus.push_back(elastic_offset_traction(n, k, nd, -h, cfg));
    }
    out.rho = extrapolate_to_zero(hs, plus);
    out.rho_interior = extrapolate_to_zero(hs, minus);
    out.jump = out.rho - out.rho_interior;
    return out;
}

cplx extrapolate_to_zero(const std::vector<double>& h, const std::vector<cplx>& v) {
    if (h.size() != v.size() || h.empty()) throw std::invalid_argument("extrapolation needs matching samples");
    std::vector<cplx> p = v;
    const std::size_t m = h.size();
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = 0; i + level < m; ++i)
            p[i] = (h[i + level] * p[i] - h[i] * p[i + 1]) / (h[i + level] - h[i]);
    return p[0];
}

double relative_error(cplx spectral, cplx quadrature) {
    const double den = std::max(std::abs(spectral), 1e-30);
    return std::abs(spectral - quadrature) / den;
}

std::vector<OracleReport> run_oracle_suite(const std::vector<int>& orders, const std::vector<cplx>& ks,
                                           const NondimMedium& nd, const OracleConfig& cfg, Fc2Variant variant,
                                           double eta_scale, unsigned threads) {
    struct Job {
        int n;
        cplx k;
    };
    std::vector<Job> jobs;
    for (int n : orders)
        for (cplx k : ks) jobs.push_back({n, k});
    std::vector<std::array<OracleReport, 4>> results(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t idx) {
        const int n = jobs[idx].n;
        const cplx k = jobs[idx].k;
        const HelmholtzSpectrum hs = helmholtz_spectrum(n, k);
        ElasticSpectrum es = elastic_spectrum(n, k, nd, variant);
        if (n == 0) es.eta *= eta_scale;
        const cplx qxi = oracle_helmholtz_single_layer(n, k, cfg);
        const NeumannPoincareOracle np = oracle_neumann_poincare(n, k, cfg);
        const ElasticOracle el = oracle_elastic_layers(n, k, nd, cfg);
        auto rep = [&](const char* fam, cplx s, cplx q) {
            return OracleReport{fam, n, k, s, q, relative_error(s, q)};
        };
        results[idx] = {rep("xi", hs.xi, qxi), rep("zeta", hs.zeta, np.direct), rep("eta", es.eta, el.eta),
                        rep("rho", es.rho, el.rho)};
    });
    std::vector<OracleReport> out;
    for (const auto& r : results)
        for (const auto& rep : r) out.push_back(rep);
    return out;
}

}  // namespace minnaert
