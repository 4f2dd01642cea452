// Acceptance checks 1-7. Prints one PASS/FAIL line per criterion and exits nonzero
// when a criterion fails that was not listed with --expect-fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minnaert/fields.hpp"
#include "minnaert/harmonics.hpp"
#include "minnaert/kupradze.hpp"
#include "minnaert/medium.hpp"
#include "minnaert/parallel.hpp"
#include "minnaert/quad_oracle.hpp"
#include "minnaert/quadrature.hpp"
#include "minnaert/resonance.hpp"
#include "minnaert/specfun.hpp"
#include "minnaert/spectra.hpp"
#include "minnaert/timedomain.hpp"

using namespace minnaert;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double vnorm(const CVec3& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2])); }

std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// Least-squares slope of log|r| against log k.
double loglog_slope(const std::vector<double>& ks, const std::function<cplx(double)>& remainder) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = ks.size();
    for (double k : ks) {
        const double x = std::log(k), y = std::log(std::abs(remainder(k)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome criterion1(const NondimMedium& nd) {
    // Limits are taken by evaluating the closed forms along k = 1e-4 * 2^-j and
    // Richardson-extrapolating in k (the first correction is O(k) for xi_0, O(k^2) otherwise).
    double worst = 0.0;
    auto limit = [](const std::function<cplx(double)>& f) {
        const double k = 1e-4;
        const cplx a = f(k), b = f(k / 2), c = f(k / 4);
        // Eliminate O(k) and O(k^2).
        const cplx r1 = 2.0 * b - a, r2 = 2.0 * c - b;
        return ((4.0 * r2 - r1) / 3.0).real();
    };
    for (int n = 0; n <= 6; ++n) {
        const double xi_exact = -1.0 / (2 * n + 1);
        const double zeta_exact = n == 0 ? 0.5 : 1.0 / (2.0 * (2 * n + 1));
        worst = std::max(worst, std::abs(limit([n](double k) { return helmholtz_spectrum(n, k).xi; }) - xi_exact));
        worst = std::max(worst, std::abs(limit([n](double k) { return helmholtz_spectrum(n, k).zeta; }) - zeta_exact));
    }
    const double l2m = nd.lambda + 2 * nd.mu;
    worst = std::max(worst, std::abs(limit([&](double k) { return elastic_spectrum(0, k, nd).eta; }) + 1.0 / (3 * l2m)));
    worst = std::max(worst,
                     std::abs(limit([&](double k) { return elastic_spectrum(0, k, nd).rho; }) - 4 * nd.mu / (3 * l2m)));
    return {worst < 1e-10, "max abs error " + fmt("%.2e", worst) + " (tol 1e-10)"};
}

Outcome criterion2(const NondimMedium& nd, unsigned threads) {
    const std::vector<int> orders{0, 1, 2, 3, 4};
    const std::vector<cplx> ks{0.1, 0.3, 0.7, cplx(0.5, 0.2)};
    double worst_h = 0.0, worst_e = 0.0;
    for (const OracleReport& r : run_oracle_suite(orders, ks, nd, OracleConfig{}, Fc2Variant::Upper, 1.0, threads)) {
        if (r.family == "xi" || r.family == "zeta")
            worst_h = std::max(worst_h, r.rel_err);
        else
            worst_e = std::max(worst_e, r.rel_err);
    }
    double lower = 0.0;
    for (const OracleReport& r : run_oracle_suite(orders, ks, nd, OracleConfig{}, Fc2Variant::Lower, 1.0, threads))
        if (r.family == "rho") lower = std::max(lower, r.rel_err);
    return {worst_h < 1e-6 && worst_e < 1e-4, "helmholtz " + fmt("%.2e", worst_h) + " (tol 1e-6), elastic " +
                                                   fmt("%.2e", worst_e) + " (tol 1e-4); lower fc2 variant rho " +
                                                   fmt("%.2e", lower)};
}

Outcome criterion3(const NondimMedium& nd) {
    const std::vector<double> ks{4e-2, 2e-2, 1e-2, 5e-3};
    double worst = 1e9;
    std::string where;
    auto check = [&](const std::string& name, const std::function<cplx(double)>& rem) {
        const double s = loglog_slope(ks, rem);
        if (s < worst) {
            worst = s;
            where = name;
        }
    };
    for (int n = 0; n <= 4; ++n) {
        check("xi_" + std::to_string(n), [n](double k) { return helmholtz_spectrum(n, k).xi - helmholtz_xi_expansion(n, k); });
        check("zeta_" + std::to_string(n),
              [n](double k) { return helmholtz_spectrum(n, k).zeta - helmholtz_zeta_expansion(n, k); });
        check("rho_" + std::to_string(n),
              [&, n](double k) { return elastic_spectrum(n, k, nd).rho - rho_expansion(n, k, nd); });
    }
    check("eta_0", [&](double k) { return elastic_spectrum(0, k, nd).eta - eta0_expansion(k, nd); });
    const cplx c = c_of_omega(nd, 1.0);
    for (int n = 0; n <= 4; ++n) {
        const SymbolExpansion e = lambda_expansion_c(n, c, nd);
        check("lambda_" + std::to_string(n),
              [&, n, e](double k) { return lambda_at(n, k, c, nd) - (e.lambda_static + k * k * e.lambda_1); });
    }
    return {worst >= 2.7, "smallest fitted exponent " + fmt("%.3f", worst) + " at " + where + " (need >= 2.7)"};
}

Outcome criterion4(const NondimMedium& nd) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> mu(0.02, 0.2), tau(0.5, 6.0), gamma(0.1, 5.0), logd(-5.0, -2.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const NondimMedium m = make_nondim(std::pow(10.0, logd(rng)), tau(rng), mu(rng), gamma(rng));
        const auto res = solve_first_order_resonance(m, 1e-2);
        worst = std::max(worst, std::abs(res.back().omega - cplx(0.0, omega0_imag(m))) / std::abs(omega0_imag(m)));
    }
    double lambda0 = std::abs(lambda_expansion(0, 1.0, nd).lambda_static);
    bool positive = true;
    for (int n = 1; n <= 6; ++n) positive = positive && lambda_expansion(n, 1.0, nd).lambda_static > 0.0;
    // The exact symbol confirms the static values: lambda_n(k) -> lambda_n as k -> 0.
    lambda0 = std::max(lambda0, std::abs(lambda_at(0, 1e-7, c_of_omega(nd, 1.0), nd)));
    for (int n = 1; n <= 6; ++n) positive = positive && lambda_at(n, 1e-7, c_of_omega(nd, 1.0), nd).real() > 0.0;
    return {worst < 1e-10 && lambda0 < 1e-12 && positive,
            "max rel error over 20 media " + fmt("%.2e", worst) + " (tol 1e-10); |lambda_0| " + fmt("%.1e", lambda0) +
                "; lambda_1..6 > 0: " + (positive ? "yes" : "no")};
}

Outcome criterion5(const NondimMedium& nd) {
    const ScatterScene scene;
    const Vec3 x{0.0, 0.05, 0.0};
    const double t = time_windows(scene, nd, x).t_plus + 1.0;
    const ResidueOracle o = residue_oracle(scene, nd, x, t);
    return {o.rel_err < 1e-6 && o.higher_modes_max < 1e-8,
            "n = 0 rel error " + fmt("%.2e", o.rel_err) + " (tol 1e-6), n >= 1 max " + fmt("%.2e", o.higher_modes_max) +
                " (tol 1e-8), radius " + fmt("%.3f", o.radius)};
}

struct TraceMetrics {
    double pre_ratio = 0.0;
    double slope = 0.0;
    double growth = 0.0;  // max of (t - t+)|P - res| over the last third / first third of the window
    double weighted_max = 0.0;
};

TraceMetrics trace_metrics(const ScatterScene& scene, const NondimMedium& nd, const Vec3& x, unsigned threads,
                           double horizon) {
    const TimeWindows tw = time_windows(scene, nd, x);
    std::vector<double> ts;
    for (double t = tw.t_minus - 5.0; t <= tw.t_plus + horizon + 1e-9; t += 0.05) ts.push_back(t);
    InverseFtOptions opts;
    opts.threads = threads;
    const InverseFtResult r = truncated_inverse_ft(scene, nd, x, ts, opts);
    const ResidueMode mode = residue_mode(scene, nd, x);
    TraceMetrics m;
    double peak = 0.0, pre = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double a = vnorm(r.values[i]);
        peak = std::max(peak, a);
        if (ts[i] <= tw.t_minus) pre = std::max(pre, a);
    }
    m.pre_ratio = pre / peak;
    std::vector<double> lx, ly;
    double first = 0.0, last = 0.0;
    const double a = tw.t_plus + 1.0, b = tw.t_plus + horizon;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] < a || ts[i] > b) continue;
        lx.push_back(ts[i]);
        ly.push_back(std::log(vnorm(r.values[i])));
        const CVec3 res = residue_approximation(mode, ts[i]);
        CVec3 d;
        for (int c = 0; c < 3; ++c) d[c] = r.values[i][c] - res[c];
        const double w = (ts[i] - tw.t_plus) * vnorm(d);
        m.weighted_max = std::max(m.weighted_max, w);
        if (ts[i] <= a + (b - a) / 3) first = std::max(first, w);
        if (ts[i] >= b - (b - a) / 3) last = std::max(last, w);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = lx.size();
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    m.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    m.growth = last / first;
    return m;
}

Outcome criterion6(const NondimMedium& nd, unsigned threads) {
    ScatterScene scene;  // epsilon = 1e-2 |z - s|, rho = resonance radius
    const Vec3 x{0.0, 0.05, 0.0};
    const TraceMetrics m = trace_metrics(scene, nd, x, threads, 10.0);
    const double target = omega0_imag(nd);
    const bool a = m.pre_ratio < 1e-2;
    const bool b = std::abs(m.slope - target) <= 0.05 * std::abs(target);
    const bool c = std::isfinite(m.growth) && m.growth <= 2.0;
    return {a && b && c, std::string("(a) pre/peak ") + fmt("%.3f", m.pre_ratio) + (a ? " ok" : " > 1e-2") +
                             "; (b) slope " + fmt("%.3f", m.slope) + " vs " + fmt("%.3f", target) + (b ? " ok" : " off by > 5%") +
                             "; (c) (t - t+)|P - res| last/first third " + fmt("%.2f", m.growth) + (c ? " ok" : " > 2")};
}

// Direct single layer over a sphere of radius eps (rule independent of the library's) against eps * S_B.
double scaling_identity_error(const NondimMedium& nd) {
    auto rule = sphere_rule(40, 80);
    const auto modes = modes_up_to(3);
    const Vec3 z{0.1, -0.2, 0.05}, X{0.4, 1.1, -0.7};
    const cplx k(3.0, 0.2);
    double worst = 0.0;
    for (double eps : {0.5, 0.25}) {
        const auto unit = unit_single_layer_modes(3, k * eps, nd, X);
        const Vec3 x{z[0] + eps * X[0], z[1] + eps * X[1], z[2] + eps * X[2]};
        for (std::size_t im = 0; im < modes.size(); ++im) {
            CVec3 direct{};
            for (std::size_t q = 0; q < rule->points.size(); ++q) {
                const Vec3& y = rule->points[q];
                const Vec3 yt{z[0] + eps * y[0], z[1] + eps * y[1], z[2] + eps * y[2]};
                const CMat3 g = kupradze(sub3(x, yt), k, nd);
                const double wq = eps * eps * rule->weights[q] * real_harmonic(modes[im].n, modes[im].m, y);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) direct[i] += wq * g[i][j] * y[j];
            }
            CVec3 d;
            for (int i = 0; i < 3; ++i) d[i] = direct[i] - eps * unit[im][i];
            worst = std::max(worst, vnorm(d) / vnorm(direct));
        }
    }
    // Inner products: integrate f g over the sphere of radius eps in physical coordinates.
    auto f = [](const Vec3& y) { return 1.0 + y[0] * y[1] - 0.5 * y[2] * y[2] * y[2]; };
    auto g = [](const Vec3& y) { return std::cos(y[0]) + y[2] - y[1] * y[1]; };
    const double eps = 0.3;
    const GaussRule& gl = gauss_legendre(40);
    double physical = 0.0;
    for (std::size_t a = 0; a < gl.x.size(); ++a) {
        const double th = 0.5 * kPi * (gl.x[a] + 1.0);
        for (int b = 0; b < 60; ++b) {
            const double ph = 2 * kPi * b / 60;
            const Vec3 y{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
            physical += 0.5 * kPi * gl.w[a] * (2 * kPi / 60) * eps * eps * std::sin(th) * f(y) * g(y);
        }
    }
    auto unit_rule = sphere_rule(32, 64);
    double unit = 0.0;
    for (std::size_t q = 0; q < unit_rule->points.size(); ++q)
        unit += unit_rule->weights[q] * f(unit_rule->points[q]) * g(unit_rule->points[q]);
    return std::max(worst, std::abs(physical - eps * eps * unit) / std::abs(physical));
}

Outcome criterion7(const NondimMedium& nd) {
    double recur = 0.0, zeta = 0.0;
    std::vector<cplx> zs;
    for (double r : {0.05, 0.2, 0.8, 1.5, 3.0, 5.0})
        for (double arg : {0.0, 0.5, -1.0}) zs.push_back(std::polar(r, arg));
    for (int n = 1; n <= 20; ++n)
        for (cplx z : zs) {
            const cplx rj = double(2 * n + 1) / z * sph_bessel_j(n, z);
            const cplx sj = std::max(std::abs(rj), std::abs(sph_bessel_j(n - 1, z)));
            recur = std::max(recur, std::abs(sph_bessel_j(n + 1, z) + sph_bessel_j(n - 1, z) - rj) / std::abs(sj));
            const cplx rh = double(2 * n + 1) / z * sph_hankel_h1(n, z);
            recur = std::max(recur, std::abs(sph_hankel_h1(n + 1, z) + sph_hankel_h1(n - 1, z) - rh) / std::abs(rh));
        }
    for (int n = 0; n <= 10; ++n)
        for (cplx z : zs) {
            const HelmholtzSpectrum s = helmholtz_spectrum(n, z);
            zeta = std::max(zeta, std::abs(s.zeta - s.zeta_alt) / std::max(1.0, std::abs(s.zeta)));
        }
    double jump = 0.0;
    for (int n = 0; n <= 3; ++n)
        for (cplx k : {cplx(0.1), cplx(0.7)}) {
            jump = std::max(jump, std::abs(oracle_neumann_poincare(n, k).jump - 1.0));
            jump = std::max(jump, std::abs(oracle_elastic_layers(n, k, nd).jump - 1.0));
        }
    const double scaling = scaling_identity_error(nd);
    double speeds = 0.0;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.3, 5.0);
    for (int i = 0; i < 100; ++i) {
        PhysicalMedium m;
        m.lambda_tilde = u(rng) * 1e6;
        m.mu_tilde = u(rng) * 1e6;
        m.rho_e = u(rng) * 1e3;
        const NondimMedium d = nondimensionalize(m);
        speeds = std::max(speeds, std::abs(d.c_s + d.c_p - 1.0));
    }
    const bool ok = recur < 1e-12 && zeta < 1e-12 && jump < 1e-4 && scaling < 1e-8 && speeds < 1e-14;
    return {ok, "recurrences " + fmt("%.1e", recur) + ", zeta forms " + fmt("%.1e", zeta) + " (tol 1e-12); jumps " +
                    fmt("%.1e", jump) + " (tol 1e-4); scaling " + fmt("%.1e", scaling) + " (tol 1e-8); c_s + c_p - 1 " +
                    fmt("%.1e", speeds) + " (tol 1e-14)"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    std::vector<int> expect_fail;
    std::vector<int> only;
    bool wide_band = false;
    app.add_option("--expect-fail", expect_fail, "criteria documented as unattainable; their failure does not fail the run");
    app.add_option("--only", only, "run only these criteria");
    app.add_flag("--wide-band", wide_band, "also run an informational time-domain check with a wide band and short pulse");
    CLI11_PARSE(app, argc, argv);

    const NondimMedium nd = nondimensionalize(PhysicalMedium{});
    const unsigned threads = worker_count_from_env();
    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    const std::set<int> selected(only.begin(), only.end());
    struct Item {
        int id;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Item> items{
        {1, 1.0, [&] { return criterion1(nd); }},
        {2, 120.0, [&] { return criterion2(nd, threads); }},
        {3, 10.0, [&] { return criterion3(nd); }},
        {4, 5.0, [&] { return criterion4(nd); }},
        {5, 60.0, [&] { return criterion5(nd); }},
        {6, 600.0, [&] { return criterion6(nd, threads); }},
        {7, 60.0, [&] { return criterion7(nd); }},
    };
    int unexpected = 0;
    for (const Item& it : items) {
        if (!selected.empty() && !selected.count(it.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = it.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < it.budget_s;
        const bool pass = o.pass && in_time;
        const bool known = expected.count(it.id) > 0;
        std::printf("criterion %d: %s  %s; runtime %.2f s (budget %.0f s)%s\n", it.id, pass ? "PASS" : "FAIL",
                    o.detail.c_str(), secs, it.budget_s, !pass && known ? " [documented as unattainable]" : "");
        std::fflush(stdout);
        if (!pass && !known) ++unexpected;
    }
    if (wide_band) {
        ScatterScene scene;
        scene.c1 = 0.3;
        scene.rho = 600.0;
        const TraceMetrics m = trace_metrics(scene, nd, {0.0, 0.05, 0.0}, threads, 3.0);
        std::printf("info (C1 = 0.3 s, rho = 600): pre/peak %.2e, slope %.4f vs %.4f, (t - t+)|P - res| max %.2e\n",
                    m.pre_ratio, m.slope, omega0_imag(nd), m.weighted_max);
    }
    return unexpected == 0 ? 0 : 1;
}
