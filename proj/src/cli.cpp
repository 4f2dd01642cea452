#include "minnaert/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "minnaert/fields.hpp"
#include "minnaert/parallel.hpp"
#include "minnaert/quad_oracle.hpp"
#include "minnaert/resonance.hpp"
#include "minnaert/spectra.hpp"
#include "minnaert/timedomain.hpp"

namespace minnaert::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

namespace {

fs::path output_dir(const RunConfig& c, const Options& o) {
    fs::path dir = o.out_dir.empty() ? fs::path(c.output.dir) : fs::path(o.out_dir);
    fs::create_directories(dir);
    return dir;
}

std::ofstream open_file(const fs::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    return f;
}

void put_complex(std::ostream& o, cplx v) { o << ',' << csv_number(v.real()) << ',' << csv_number(v.imag()); }

ordered_json complex_json(cplx v) { return ordered_json{{"re", v.real()}, {"im", v.imag()}}; }

std::vector<cplx> sorted_ks(std::vector<cplx> ks) {
    std::sort(ks.begin(), ks.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return ks;
}

// Runs a command body, mapping exceptions onto exit codes.
template <class Body>
int guarded(std::ostream& log, Body&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        log << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
}

}  // namespace

int cmd_spectra(const RunConfig& config, const Options& opts, std::ostream& log) {
    return guarded(log, [&] {
        validate(config);
        const NondimMedium nd = nondimensionalize(config.medium);
        const fs::path dir = output_dir(config, opts);
        const std::vector<cplx> ks = sorted_ks(config.sweep.k_values);
        std::ofstream h = open_file(dir / "spectra_helmholtz.csv");
        std::ofstream e = open_file(dir / "spectra_elastic.csv");
        h << "n,k_re,k_im,xi_re,xi_im,zeta_re,zeta_im\n";
        e << "n,k_re,k_im";
        for (const char* name : {"b", "c1", "d1", "c2", "d2", "fb", "fc1", "fd1", "fc2", "fd2", "eta", "rho"})
            e << ',' << name << "_re," << name << "_im";
        e << '\n';
        for (int n = config.sweep.n_min; n <= config.sweep.n_max; ++n)
            for (cplx k : ks) {
                const HelmholtzSpectrum hs = helmholtz_spectrum(n, k);
                h << n;
                put_complex(h, k);
                put_complex(h, hs.xi);
                put_complex(h, hs.zeta);
                h << '\n';
                const ElasticSpectrum es = elastic_spectrum(n, k, nd, config.output.fc2);
                e << n;
                put_complex(e, k);
                for (cplx v : {es.b, es.c1, es.d1, es.c2, es.d2, es.fb, es.fc1, es.fd1, es.fc2, es.fd2, es.eta, es.rho})
                    put_complex(e, v);
                e << '\n';
            }
        log << "wrote " << (dir / "spectra_helmholtz.csv").string() << " and " << (dir / "spectra_elastic.csv").string()
            << "\n";
        return int(kOk);
    });
}

int cmd_resonance(const RunConfig& config, const Options& opts, std::ostream& log) {
    return guarded(log, [&] {
        validate(config);
        const NondimMedium nd = nondimensionalize(config.medium);
        const fs::path dir = output_dir(config, opts);
        const std::vector<MinnaertResonance> res = solve_first_order_resonance(nd, config.scene.epsilon);
        ordered_json report;
        report["medium"] = {{"delta", nd.delta}, {"tau", nd.tau},   {"lambda", nd.lambda}, {"mu", nd.mu},
                            {"c_b", nd.c_b},     {"c_s", nd.c_s},   {"c_p", nd.c_p},       {"gamma", nd.gamma}};
        ordered_json list = ordered_json::array();
        double residual = 0.0;
        for (const MinnaertResonance& r : res) {
            list.push_back({{"kind", r.kind == ResonanceKind::Static ? "static" : "first_order_corrected"},
                            {"n", r.mode_n},
                            {"re", r.omega.real()},
                            {"im", r.omega.imag()},
                            {"removable", r.removable},
                            {"residual", r.residual},
                            {"iterations", r.iterations}});
            if (!r.removable) residual = r.residual;
        }
        report["resonances"] = list;
        report["omega0_imag_closed_form"] = omega0_imag(nd);
        report["radius"] = resonance_radius(nd);
        report["residual"] = residual;
        std::ofstream j = open_file(dir / "resonance.json");
        j << report.dump(2) << '\n';

        std::ofstream c = open_file(dir / "resonance_sweep.csv");
        c << "n,omega,abs_lambda,lambda_re,lambda_im\n";
        const int count = config.sweep.omega_count;
        for (int n = config.sweep.n_min; n <= config.sweep.n_max; ++n)
            for (int i = 0; i < count; ++i) {
                const double w = count == 1 ? config.sweep.omega_min
                                            : config.sweep.omega_min + (config.sweep.omega_max - config.sweep.omega_min) *
                                                                           i / (count - 1);
                const cplx v = lambda_exact(n, w, nd, config.scene.epsilon, config.output.fc2).value;
                c << n << ',' << csv_number(w) << ',' << csv_number(std::abs(v));
                put_complex(c, v);
                c << '\n';
            }
        log << "Omega_0 = " << res.back().omega.real() << " + " << res.back().omega.imag() << "i, radius "
            << resonance_radius(nd) << "\n";
        return int(kOk);
    });
}

int cmd_oracle(const RunConfig& config, const Options& opts, std::ostream& log) {
    return guarded(log, [&] {
        validate(config);
        const NondimMedium nd = nondimensionalize(config.medium);
        const fs::path dir = output_dir(config, opts);
        std::vector<int> orders;
        for (int n = config.sweep.n_min; n <= config.sweep.n_max; ++n) orders.push_back(n);
        const std::vector<OracleReport> reps =
            run_oracle_suite(orders, sorted_ks(config.sweep.k_values), nd, OracleConfig{}, config.output.fc2,
                             config.output.eta0_scale, opts.threads);
        const double tol_h = opts.tol.value_or(config.output.tol_helmholtz);
        const double tol_e = opts.tol.value_or(config.output.tol_elastic);
        std::map<std::string, double> worst;
        bool ok = true;
        ordered_json arr = ordered_json::array();
        for (const OracleReport& r : reps) {
            const bool helm = r.family == "xi" || r.family == "zeta";
            const double tol = helm ? tol_h : tol_e;
            const bool pass = r.rel_err < tol;
            ok = ok && pass;
            worst[r.family] = std::max(worst[r.family], r.rel_err);
            arr.push_back({{"family", r.family},
                           {"n", r.n},
                           {"k", complex_json(r.k)},
                           {"spectral_value", complex_json(r.spectral_value)},
                           {"quadrature_value", complex_json(r.quadrature_value)},
                           {"rel_err", r.rel_err},
                           {"tolerance", tol},
                           {"pass", pass}});
        }
        ordered_json summary;
        for (const char* fam : {"xi", "zeta", "eta", "rho"}) summary[fam] = worst[fam];
        ordered_json report{{"reports", arr}, {"max_rel_err", summary}, {"pass", ok}};
        std::ofstream j = open_file(dir / "oracle.json");
        j << report.dump(2) << '\n';
        for (const auto& [fam, v] : worst) log << fam << ": max rel_err " << v << "\n";
        log << (ok ? "oracle suite passed" : "oracle suite FAILED") << "\n";
        return ok ? int(kOk) : int(kCheckFailed);
    });
}

int cmd_field(const RunConfig& config, const Options& opts, std::ostream& log) {
    return guarded(log, [&] {
        validate(config);
        const NondimMedium nd = nondimensionalize(config.medium);
        const fs::path dir = output_dir(config, opts);
        const ScatterScene& sc = config.scene;
        const double w = config.sweep.field_omega;
        if (w == 0.0) throw std::invalid_argument("field_omega must be nonzero");
        const cplx f = pulse_ft(w, Pulse{sc.c1});
        std::vector<Vec3> pts;
        const GridConfig& g = config.grid;
        auto axis = [&](int a, int i) {
            return g.counts[a] == 1 ? g.lo[a] : g.lo[a] + (g.hi[a] - g.lo[a]) * i / (g.counts[a] - 1);
        };
        for (int i = 0; i < g.counts[0]; ++i)
            for (int j = 0; j < g.counts[1]; ++j)
                for (int k = 0; k < g.counts[2]; ++k) pts.push_back({axis(0, i), axis(1, j), axis(2, k)});
        std::vector<int> skip(pts.size(), 0);
        std::vector<CVec3> sca(pts.size()), inc(pts.size());
        parallel_for(pts.size(), opts.threads, [&](std::size_t q) {
            if (!(norm3(sub3(pts[q], sc.z)) > sc.epsilon) || norm3(sub3(pts[q], sc.s)) == 0.0) {
                skip[q] = 1;
                return;
            }
            sca[q] = modal_scattered_field(sc, nd, w, f, pts[q], config.output.fc2).total;
            inc[q] = incident_field(sc, nd, w, f, pts[q]);
        });
        std::ofstream o = open_file(dir / "field.csv");
        o << "# omega = " << csv_number(w) << "\n";
        o << "x,y,z,sca_x_re,sca_x_im,sca_y_re,sca_y_im,sca_z_re,sca_z_im,inc_x_re,inc_x_im,inc_y_re,inc_y_im,inc_z_re,"
             "inc_z_im\n";
        int skipped = 0;
        for (std::size_t q = 0; q < pts.size(); ++q) {
            if (skip[q]) {
                ++skipped;
                continue;
            }
            o << csv_number(pts[q][0]) << ',' << csv_number(pts[q][1]) << ',' << csv_number(pts[q][2]);
            for (cplx v : sca[q]) put_complex(o, v);
            for (cplx v : inc[q]) put_complex(o, v);
            o << '\n';
        }
        log << "wrote " << pts.size() - skipped << " field points (" << skipped
            << " inside the bubble or at the source skipped)\n";
        return int(kOk);
    });
}

int cmd_timedomain(const RunConfig& config, const Options& opts, std::ostream& log) {
    return guarded(log, [&] {
        validate(config);
        const NondimMedium nd = nondimensionalize(config.medium);
        const fs::path dir = output_dir(config, opts);
        const ScatterScene& sc = config.scene;
        const double rho = band_limit(sc, nd);
        if (rho < resonance_radius(nd)) {
            log << "warning: rho = " << rho << " is below the resonance radius " << resonance_radius(nd)
                << "; the pole is outside the band\n";
            if (opts.strict) throw std::invalid_argument("rho below the resonance radius (strict mode)");
        }
        std::vector<double> ts;
        const SweepConfig& s = config.sweep;
        for (int i = 0; i < s.t_count; ++i)
            ts.push_back(s.t_count == 1 ? s.t_min : s.t_min + (s.t_max - s.t_min) * i / (s.t_count - 1));
        InverseFtOptions io;
        io.threads = opts.threads;
        io.variant = config.output.fc2;
        for (std::size_t obs = 0; obs < config.observers.size(); ++obs) {
            const Vec3& x = config.observers[obs];
            const TimeWindows tw = time_windows(sc, nd, x);
            const InverseFtResult r = truncated_inverse_ft(sc, nd, x, ts, io);
            const ResidueMode mode = residue_mode(sc, nd, x);
            const fs::path file = dir / ("timedomain_" + std::to_string(obs) + ".csv");
            std::ofstream o = open_file(file);
            o << "# observer = " << csv_number(x[0]) << ", " << csv_number(x[1]) << ", " << csv_number(x[2]) << "\n";
            o << "# t_minus = " << csv_number(tw.t_minus) << "\n";
            o << "# t_plus = " << csv_number(tw.t_plus) << "\n";
            o << "# rho = " << csv_number(rho) << "\n";
            o << "# omega0_imag = " << csv_number(mode.omega0_imag) << "\n";
            o << "# panels_per_half_band = " << r.panels << "\n";
            if (ts.back() <= tw.t_minus) o << "# regime = pre-arrival (t <= t_minus for every sample)\n";
            o << "t,P_x_re,P_x_im,P_y_re,P_y_im,P_z_re,P_z_im,res_x_re,res_x_im,res_y_re,res_y_im,res_z_re,res_z_im,"
                 "diff_norm\n";
            for (std::size_t i = 0; i < ts.size(); ++i) {
                o << csv_number(ts[i]);
                for (cplx v : r.values[i]) put_complex(o, v);
                if (ts[i] >= tw.t_plus) {
                    const CVec3 res = residue_approximation(mode, ts[i]);
                    double d2 = 0.0;
                    for (int c = 0; c < 3; ++c) {
                        put_complex(o, res[c]);
                        d2 += std::norm(r.values[i][c] - res[c]);
                    }
                    o << ',' << csv_number(std::sqrt(d2));
                } else {
                    o << ",NA,NA,NA,NA,NA,NA,NA";
                }
                o << '\n';
            }
            log << "wrote " << file.string() << " (t_minus " << tw.t_minus << ", t_plus " << tw.t_plus << ")\n";
        }
        return int(kOk);
    });
}

}  // namespace minnaert::cli
