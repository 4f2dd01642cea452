#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minnaert/fields.hpp"
#include "minnaert/medium.hpp"
#include "minnaert/resonance.hpp"
#include "minnaert/specfun.hpp"
#include "minnaert/spectra.hpp"
#include "minnaert/timedomain.hpp"

namespace py = pybind11;
using namespace minnaert;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectra, resonances and time-domain fields of a gas bubble in an elastic medium";

    py::enum_<Fc2Variant>(m, "Fc2Variant").value("Lower", Fc2Variant::Lower).value("Upper", Fc2Variant::Upper);

    py::class_<PhysicalMedium>(m, "PhysicalMedium")
        .def(py::init<>())
        .def_readwrite("rho_b", &PhysicalMedium::rho_b)
        .def_readwrite("rho_e", &PhysicalMedium::rho_e)
        .def_readwrite("kappa", &PhysicalMedium::kappa)
        .def_readwrite("gamma", &PhysicalMedium::gamma)
        .def_readwrite("lambda_tilde", &PhysicalMedium::lambda_tilde)
        .def_readwrite("mu_tilde", &PhysicalMedium::mu_tilde);

    py::class_<NondimMedium>(m, "NondimMedium")
        .def_readonly("delta", &NondimMedium::delta)
        .def_readonly("tau", &NondimMedium::tau)
        .def_readonly("lambda_", &NondimMedium::lambda)
        .def_readonly("mu", &NondimMedium::mu)
        .def_readonly("c_b", &NondimMedium::c_b)
        .def_readonly("c_s", &NondimMedium::c_s)
        .def_readonly("c_p", &NondimMedium::c_p)
        .def_readonly("gamma", &NondimMedium::gamma);

    m.def("nondimensionalize", &nondimensionalize, py::arg("medium"));
    m.def("make_nondim", &make_nondim, py::arg("delta"), py::arg("tau"), py::arg("mu"), py::arg("gamma"),
          py::arg("c_b") = 340.0);

    m.def("sph_bessel_j", &sph_bessel_j, py::arg("n"), py::arg("z"));
    m.def("sph_hankel_h1", &sph_hankel_h1, py::arg("n"), py::arg("z"));

    m.def(
        "helmholtz_spectrum",
        [](int n, cplx k) {
            const HelmholtzSpectrum s = helmholtz_spectrum(n, k);
            return py::dict(py::arg("xi") = s.xi, py::arg("zeta") = s.zeta);
        },
        py::arg("n"), py::arg("k"));
    m.def(
        "elastic_spectrum",
        [](int n, cplx k, const NondimMedium& nd, Fc2Variant v) {
            const ElasticSpectrum s = elastic_spectrum(n, k, nd, v);
            return py::dict(py::arg("eta") = s.eta, py::arg("rho") = s.rho);
        },
        py::arg("n"), py::arg("k"), py::arg("medium"), py::arg("variant") = Fc2Variant::Upper);
    m.def("elastic_static_limits", &elastic_static_limits, py::arg("n"), py::arg("medium"));

    m.def(
        "lambda_exact",
        [](int n, cplx omega, const NondimMedium& nd, double eps) { return lambda_exact(n, omega, nd, eps).value; },
        py::arg("n"), py::arg("omega"), py::arg("medium"), py::arg("epsilon"));
    m.def("omega0_imag", &omega0_imag, py::arg("medium"));
    m.def("resonance_radius", &resonance_radius, py::arg("medium"));
    m.def(
        "first_order_resonance",
        [](const NondimMedium& nd, double eps) { return solve_first_order_resonance(nd, eps).back().omega; },
        py::arg("medium"), py::arg("epsilon"));

    m.def("pulse_ft", [](cplx w, double c1) { return pulse_ft(w, Pulse{c1}); }, py::arg("omega"), py::arg("c1") = 1.0);

    py::class_<ScatterScene>(m, "ScatterScene")
        .def(py::init<>())
        .def_readwrite("z", &ScatterScene::z)
        .def_readwrite("s", &ScatterScene::s)
        .def_readwrite("p", &ScatterScene::p)
        .def_readwrite("epsilon", &ScatterScene::epsilon)
        .def_readwrite("n_trunc", &ScatterScene::n_trunc)
        .def_readwrite("c1", &ScatterScene::c1)
        .def_readwrite("rho", &ScatterScene::rho);

    m.def(
        "scattered_field",
        [](const ScatterScene& sc, const NondimMedium& nd, cplx omega, const Vec3& x) {
            return modal_scattered_field(sc, nd, omega, pulse_ft(omega, Pulse{sc.c1}), x).total;
        },
        py::arg("scene"), py::arg("medium"), py::arg("omega"), py::arg("x"));
    m.def(
        "time_windows",
        [](const ScatterScene& sc, const NondimMedium& nd, const Vec3& x) {
            const TimeWindows w = time_windows(sc, nd, x);
            return py::make_tuple(w.t_minus, w.t_plus);
        },
        py::arg("scene"), py::arg("medium"), py::arg("x"));
    m.def(
        "inverse_ft",
        [](const ScatterScene& sc, const NondimMedium& nd, const Vec3& x, const std::vector<double>& ts,
           unsigned threads) {
            InverseFtOptions o;
            o.threads = threads;
            py::gil_scoped_release release;
            return truncated_inverse_ft(sc, nd, x, ts, o).values;
        },
        py::arg("scene"), py::arg("medium"), py::arg("x"), py::arg("times"), py::arg("threads") = 1);
    m.def(
        "residue_approximation",
        [](const ScatterScene& sc, const NondimMedium& nd, const Vec3& x, double t) {
            return residue_approximation(sc, nd, x, t);
        },
        py::arg("scene"), py::arg("medium"), py::arg("x"), py::arg("t"));
}
