#include "minnaert/fields.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "minnaert/kupradze.hpp"
#include "minnaert/quadrature.hpp"
#include "minnaert/resonance.hpp"

namespace minnaert {

namespace {

constexpr int kQTheta = 48;
constexpr int kQPhi = 96;

struct HarmonicTable {
    std::vector<Mode> modes;
    std::vector<std::vector<double>> values;  // [mode][quadrature point]
    // Sphere moments <1, Y>, <y_i, Y>, <y_i y_j, Y> by quadrature; the forcing integrands
    // are linear combinations of these with frequency-dependent coefficients.
    std::vector<double> m0;
    std::vector<std::array<double, 3>> m1;
    std::vector<std::array<std::array<double, 3>, 3>> m2;
};

std::shared_ptr<const HarmonicTable> harmonic_table(int n_max) {
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const HarmonicTable>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[n_max];
    if (slot) return slot;
    auto rule = sphere_rule(kQTheta, kQPhi);
    auto t = std::make_shared<HarmonicTable>();
    t->modes = modes_up_to(n_max);
    for (const Mode& md : t->modes) {
        std::vector<double> col(rule->points.size());
        for (std::size_t q = 0; q < col.size(); ++q) col[q] = real_harmonic(md.n, md.m, rule->points[q]);
        double a0 = 0.0;
        std::array<double, 3> a1{};
        std::array<std::array<double, 3>, 3> a2{};
        for (std::size_t q = 0; q < col.size(); ++q) {
            const Vec3& y = rule->points[q];
            const double wy = rule->weights[q] * col[q];
            a0 += wy;
            for (int i = 0; i < 3; ++i) {
                a1[i] += wy * y[i];
                for (int j = 0; j < 3; ++j) a2[i][j] += wy * y[i] * y[j];
            }
        }
        t->m0.push_back(a0);
        t->m1.push_back(a1);
        t->m2.push_back(a2);
        t->values.push_back(std::move(col));
    }
    slot = t;
    return slot;
}

CVec3 mat_vec(const CMat3& A, const Vec3& v) {
    CVec3 r{};
    for (int i = 0; i < 3; ++i) r[i] = A[i][0] * v[0] + A[i][1] * v[1] + A[i][2] * v[2];
    return r;
}

cplx helmholtz_factor(int n, cplx k1sq) {
    if (n == 0) return k1sq * reduced_ratio0(k1sq);
    return neumann_dirichlet_ratio(n, std::sqrt(k1sq));
}

}  // namespace

void validate(const ScatterScene& scene) {
    if (!(scene.epsilon > 0.0)) throw std::invalid_argument("bubble radius epsilon must be positive");
    if (!(norm3(sub3(scene.z, scene.s)) > scene.epsilon))
        throw std::invalid_argument("source must lie outside the bubble (|z - s| > epsilon)");
    if (scene.n_trunc < 0 || scene.n_trunc > kMaxHarmonicOrder)
        throw std::invalid_argument("N_trunc must lie in [0, 8]");
    if (!(scene.c1 > 0.0)) throw std::invalid_argument("pulse length C1 must be positive");
    if (scene.rho < 0.0) throw std::invalid_argument("band limit rho must be non-negative");
}

cplx kupradze_wavenumber(const NondimMedium& nd, cplx omega) { return omega * nd.tau / nd.c_b; }

CVec3 incident_field(const ScatterScene& scene, const NondimMedium& nd, cplx omega, cplx f, const Vec3& x) {
    const Vec3 d = sub3(x, scene.s);
    if (norm3(d) == 0.0) throw std::domain_error("incident field is singular at the source");
    const CVec3 g = mat_vec(kupradze(d, kupradze_wavenumber(nd, omega), nd), scene.p);
    const cplx a = -omega * omega * f;
    return {a * g[0], a * g[1], a * g[2]};
}

std::vector<ForcingBlock> forcing_blocks(const ScatterScene& scene, const NondimMedium& nd, cplx omega) {
    validate(scene);
    const cplx kt = kupradze_wavenumber(nd, omega);
    const Vec3 d = sub3(scene.z, scene.s);
    const CVec3 gp = mat_vec(kupradze(d, kt, nd), scene.p);
    const std::array<CMat3, 3> grads = kupradze_grad_all(d, kt, nd);
    // D_ij = sum_l d_j Gamma_il p_l
    CMat3 D{};
    for (int j = 0; j < 3; ++j) {
        const CVec3 col = mat_vec(grads[j], scene.p);
        for (int i = 0; i < 3; ++i) D[i][j] = col[i];
    }
    const cplx div = kupradze_divergence(d, kt, nd, scene.p);

    auto table = harmonic_table(scene.n_trunc);
    std::vector<ForcingBlock> out;
    for (std::size_t im = 0; im < table->modes.size(); ++im) {
        ForcingBlock b{table->modes[im], 0.0, 0.0, 0.0, 0.0};
        for (int i = 0; i < 3; ++i) {
            b.t1 += gp[i] * table->m1[im][i];
            for (int j = 0; j < 3; ++j) b.t2 += D[i][j] * table->m2[im][i][j];
        }
        b.t3 = div * table->m0[im];
        b.t4 = 2.0 * b.t2;
        out.push_back(b);
    }
    return out;
}

std::vector<ModeCoefficient> forcing_coefficients(const ScatterScene& scene, const NondimMedium& nd, cplx omega,
                                                  cplx f) {
    if (omega == cplx(0.0)) throw std::domain_error("forcing coefficients need omega != 0");
    const cplx k = omega * scene.epsilon / nd.c_b;
    const cplx k1sq = k1_squared(nd, omega, scene.epsilon);
    const double dt2 = nd.delta * nd.tau * nd.tau;
    const double eps = scene.epsilon;
    std::vector<ModeCoefficient> out;
    for (const ForcingBlock& b : forcing_blocks(scene, nd, omega)) {
        const double n = b.mode.n;
        const cplx factor = n - k1sq / (2.0 * n + 3.0);
        const cplx v = omega * omega * f *
                       (dt2 * k * k * (b.t1 + eps * b.t2) + eps * factor * (nd.lambda * b.t3 + nd.mu * b.t4));
        out.push_back({b.mode, v});
    }
    return out;
}

cplx forcing0_reduced(const ForcingBlock& b0, const ScatterScene& scene, const NondimMedium& nd, cplx omega,
                      cplx f) {
    if (b0.mode.n != 0) throw std::invalid_argument("reduced forcing is defined for n = 0 only");
    const double dt2 = nd.delta * nd.tau * nd.tau;
    const cplx wc = omega + kI * nd.gamma;  // omega c(omega)
    // k^2 c / k^2 = c, and omega c = omega + i gamma.
    return omega * omega * f *
           (dt2 * omega * (b0.t1 + scene.epsilon * b0.t2) -
            scene.epsilon * wc / 3.0 * (nd.lambda * b0.t3 + nd.mu * b0.t4));
}

cplx symbol0_reduced(const NondimMedium& nd, cplx omega, double epsilon) {
    const cplx wc = omega + kI * nd.gamma;
    const double dt2 = nd.delta * nd.tau * nd.tau;
    const cplx k1sq = k1_squared(nd, omega, epsilon);
    if (omega == cplx(0.0)) {
        return wc * reduced_ratio0(0.0) * elastic_static_limits(0, nd).second;
    }
    const cplx k = omega * epsilon / nd.c_b;
    const ElasticSpectrum es = elastic_spectrum(0, k * nd.tau, nd);
    return wc * reduced_ratio0(k1sq) * es.rho + omega * dt2 * es.eta;
}

std::vector<CVec3> unit_single_layer_modes(int n_max, cplx k, const NondimMedium& nd, const Vec3& X) {
    if (!(norm3(X) > 1.0)) throw std::domain_error("single layer evaluation point must lie outside the unit sphere");
    auto rule = sphere_rule(kQTheta, kQPhi);
    auto table = harmonic_table(n_max);
    std::vector<CVec3> out(table->modes.size(), CVec3{});
    for (std::size_t q = 0; q < rule->points.size(); ++q) {
        const Vec3& y = rule->points[q];
        const CVec3 gy = mat_vec(kupradze(sub3(X, y), k, nd), y);
        for (std::size_t im = 0; im < out.size(); ++im) {
            const double wy = rule->weights[q] * table->values[im][q];
            for (int i = 0; i < 3; ++i) out[im][i] += wy * gy[i];
        }
    }
    return out;
}

std::vector<CVec3> bubble_single_layer_modes(const ScatterScene& scene, const NondimMedium& nd, cplx omega,
                                             const Vec3& x) {
    const double eps = scene.epsilon;
    const Vec3 d = sub3(x, scene.z);
    if (!(norm3(d) > eps)) throw std::domain_error("evaluation point lies inside the closed bubble");
    auto rule = sphere_rule(kQTheta, kQPhi);
    auto table = harmonic_table(scene.n_trunc);
    const cplx kt = kupradze_wavenumber(nd, omega);
    std::vector<CVec3> out(table->modes.size(), CVec3{});
    for (std::size_t q = 0; q < rule->points.size(); ++q) {
        const Vec3& y = rule->points[q];
        const Vec3 r{d[0] - eps * y[0], d[1] - eps * y[1], d[2] - eps * y[2]};
        const CVec3 gy = mat_vec(kupradze(r, kt, nd), y);
        for (std::size_t im = 0; im < out.size(); ++im) {
            // Y_breve = Y / eps and d sigma = eps^2 d sigma_B.
            const double wy = eps * rule->weights[q] * table->values[im][q];
            for (int i = 0; i < 3; ++i) out[im][i] += wy * gy[i];
        }
    }
    return out;
}

ModalField modal_scattered_field(const ScatterScene& scene, const NondimMedium& nd, cplx omega, cplx f,
                                 const Vec3& x, Fc2Variant variant) {
    validate(scene);
    ModalField mf;
    const std::vector<CVec3> layers = bubble_single_layer_modes(scene, nd, omega, x);
    const bool at_zero = (omega == cplx(0.0));
    std::vector<ForcingBlock> blocks = forcing_blocks(scene, nd, omega);
    const cplx k = omega * scene.epsilon / nd.c_b;
    const cplx k1sq = k1_squared(nd, omega, scene.epsilon);
    std::vector<cplx> symbols(scene.n_trunc + 1);
    for (int n = 1; n <= scene.n_trunc; ++n) {
        if (at_zero) {
            symbols[n] = double(n) * elastic_static_limits(n, nd).second;
        } else {
            const ElasticSpectrum es = elastic_spectrum(n, k * nd.tau, nd, variant);
            symbols[n] = helmholtz_factor(n, k1sq) * es.rho + nd.delta * nd.tau * nd.tau * k * k * es.eta;
        }
    }
    std::vector<ModeCoefficient> coeffs;
    if (!at_zero) coeffs = forcing_coefficients(scene, nd, omega, f);
    for (std::size_t im = 0; im < blocks.size(); ++im) {
        ModalTerm t;
        t.mode = blocks[im].mode;
        t.forcing = at_zero ? cplx(0.0) : coeffs[im].value;
        if (t.mode.n == 0) {
            t.symbol = at_zero ? cplx(0.0) : lambda_exact(0, omega, nd, scene.epsilon, variant).value;
            t.ratio = forcing0_reduced(blocks[im], scene, nd, omega, f) / symbol0_reduced(nd, omega, scene.epsilon);
        } else {
            t.symbol = symbols[t.mode.n];
            t.ratio = t.forcing / t.symbol;
        }
        for (int i = 0; i < 3; ++i) {
            t.value[i] = t.ratio * layers[im][i];
            mf.total[i] += t.value[i];
        }
        mf.terms.push_back(t);
    }
    return mf;
}

}  // namespace minnaert
