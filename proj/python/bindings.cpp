#include <sstream>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dephasing/analytic.hpp"
#include "dephasing/asymptotics.hpp"
#include "dephasing/cli.hpp"
#include "dephasing/errors.hpp"
#include "dephasing/nonhermitian.hpp"
#include "dephasing/numerics.hpp"
#include "dephasing/oracle.hpp"

namespace py = pybind11;
using namespace dephasing;

namespace {

py::dict series_to_dict(const analytic::CorrelatorSeries& sr) {
    const auto n = static_cast<py::ssize_t>(sr.points.size());
    py::array_t<double> t(n), gamma(n), phase(n), phi(n), px(n), cx(n);
    auto T = t.mutable_unchecked<1>(), G = gamma.mutable_unchecked<1>(), I = phase.mutable_unchecked<1>();
    auto F = phi.mutable_unchecked<1>(), P = px.mutable_unchecked<1>(), C = cx.mutable_unchecked<1>();
    for (py::ssize_t i = 0; i < n; ++i) {
        const auto& p = sr.points[static_cast<std::size_t>(i)];
        T(i) = p.t;
        G(i) = p.gamma;
        I(i) = p.phase_integral;
        F(i) = p.phi;
        P(i) = p.p_x;
        C(i) = p.c_x;
    }
    py::dict d;
    d["t"] = t;
    d["gamma"] = gamma;
    d["phase_integral"] = phase;
    d["phi"] = phi;
    d["P_x"] = px;
    d["C_x"] = cx;
    d["source"] = std::string(analytic::to_string(sr.source));
    return d;
}

}  // namespace

PYBIND11_MODULE(_dephasing, m) {
    m.doc() = "Pure-dephasing qubit correlators: closed forms, oracles and asymptotics.";

    auto base = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SingularityError>(m, "SingularityError", PyExc_ValueError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<FitError>(m, "FitError", PyExc_RuntimeError);

    py::class_<BathSpec>(m, "BathSpec")
        .def(py::init<double, double, double, double>(), py::arg("s"), py::arg("A"), py::arg("B"),
             py::arg("tau") = 0.0)
        .def_property_readonly("s", &BathSpec::exponent)
        .def_property_readonly("A", &BathSpec::coupling)
        .def_property_readonly("B", &BathSpec::cutoff)
        .def_property_readonly("tau", &BathSpec::non_hermiticity)
        .def("is_hermitian", &BathSpec::is_hermitian)
        .def("__repr__", [](const BathSpec& b) {
            std::ostringstream os;
            os << "BathSpec(s=" << b.exponent() << ", A=" << b.coupling() << ", B=" << b.cutoff()
               << ", tau=" << b.non_hermiticity() << ")";
            return os.str();
        });

    py::class_<ModelSpec>(m, "ModelSpec")
        .def(py::init<BathSpec, double, double>(), py::arg("bath"), py::arg("eps") = 0.0, py::arg("T") = 0.0)
        .def_property_readonly("bath", &ModelSpec::bath)
        .def_property_readonly("eps", &ModelSpec::bias)
        .def_property_readonly("T", &ModelSpec::temperature);

    m.def("spectral_density", &spectral_density, py::arg("bath"), py::arg("omega"));
    m.def("gamma_fn", &numerics::gamma_fn, py::arg("x"));

    m.def("gamma", &analytic::gamma_closed, py::arg("bath"), py::arg("t"));
    m.def("phase_integral", &analytic::phase_integral_closed, py::arg("bath"), py::arg("t"));
    m.def("phi", &analytic::phi_fn, py::arg("bath"), py::arg("t"));
    m.def("p_x", &analytic::p_x, py::arg("model"), py::arg("t"));
    m.def("c_x", &analytic::c_x, py::arg("model"), py::arg("t"));

    m.def(
        "evaluate",
        [](const ModelSpec& model, std::vector<double> times) {
            return series_to_dict(
                cli::evaluate_model(model, analytic::TimeGrid(std::move(times), analytic::Spacing::Linear)));
        },
        py::arg("model"), py::arg("times"),
        "Columns t, gamma, phase_integral, phi, P_x, C_x as arrays. Non-Hermitian baths are renormalized.");

    m.def("gamma_nh", &nonhermitian::gamma_nh, py::arg("bath"), py::arg("t"));
    m.def("p_x_nh", &nonhermitian::p_x_nh, py::arg("bath"), py::arg("t"));
    m.def(
        "renormalize",
        [](const BathSpec& b) {
            const auto r = nonhermitian::renormalize(b);
            return py::make_tuple(r.coupling, r.cutoff);
        },
        py::arg("bath"), "(A~, B~) of the equivalent Hermitian bath.");
    m.def(
        "dp_dtau", [](const BathSpec& b, double t) { return nonhermitian::dp_dtau(b, t).value; },
        py::arg("bath"), py::arg("t"));

    m.def(
        "gamma_quadrature", [](const ModelSpec& model, double t) { return oracle::gamma_quadrature(model, t); },
        py::arg("model"), py::arg("t"));
    m.def(
        "gamma_mode_sum",
        [](const BathSpec& bath, double t, std::size_t modes) {
            const auto db = oracle::DiscreteBath::sample(bath, modes, oracle::Sampling::LogFreq);
            return oracle::gamma_mode_sum(db, t).gamma;
        },
        py::arg("bath"), py::arg("t"), py::arg("modes") = 4000);

    py::enum_<asymptotics::CrossoverFamily>(m, "CrossoverFamily")
        .value("OhmicOddA", asymptotics::CrossoverFamily::OhmicOddA)
        .value("EvenS_P", asymptotics::CrossoverFamily::EvenS_P)
        .value("OddS_phi", asymptotics::CrossoverFamily::OddS_phi)
        .value("EvenS_C", asymptotics::CrossoverFamily::EvenS_C)
        .value("OddS_C", asymptotics::CrossoverFamily::OddS_C);
    m.def("crossover_time", &asymptotics::crossover_time, py::arg("model"), py::arg("family"));

    m.def(
        "figure_csv",
        [](int id, std::vector<double> tau_list) {
            std::ostringstream os;
            cli::write_figure(id, os, tau_list);
            return os.str();
        },
        py::arg("id"), py::arg("tau_list") = std::vector<double>{});

    m.def(
        "verify",
        [](double tolerance_scale) {
            cli::VerifyOptions opt;
            opt.tolerance_scale = tolerance_scale;
            py::list out;
            for (const auto& c : cli::run_verification(opt))
                out.append(py::make_tuple(c.name, c.pass, c.max_residual, c.tolerance));
            return out;
        },
        py::arg("tolerance_scale") = 1.0, "List of (name, passed, residual, tolerance).");
}
