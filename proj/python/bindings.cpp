#include <array>
#include <string>
#include <tuple>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mdrlab/harness.hpp"

namespace py = pybind11;
using namespace mdrlab;

namespace {

using Triple = std::array<double, 3>;

Vec3 vec(const Triple &t) { return {t[0], t[1], t[2]}; }

Eigen::VectorXcd array_of(const Ket &k) { return k.amplitudes(); }

Ket ket_of(const Eigen::VectorXcd &v) { return Ket::from_amplitudes(Amplitudes(v)); }

MdrKind kind_of(const std::string &name) {
    if (name == "heisenberg") return MdrKind::Heisenberg;
    if (name == "ozawa") return MdrKind::Ozawa;
    throw DomainError("kind must be 'heisenberg' or 'ozawa'");
}

py::dict sample_dict(const MdrSample &s) {
    py::dict d;
    d["prob_plus"] = s.prob_plus;
    d["prob_minus"] = s.prob_minus;
    d["eps_plus"] = s.eps_plus;
    d["eps_minus"] = s.eps_minus;
    d["eta_plus"] = s.eta_plus;
    d["eta_minus"] = s.eta_minus;
    d["dA_plus"] = s.dA_plus;
    d["dA_minus"] = s.dA_minus;
    d["dB_plus"] = s.dB_plus;
    d["dB_minus"] = s.dB_minus;
    d["E_A2A3"] = s.E_A2A3;
    d["E_B1B2"] = s.E_B1B2;
    d["residual"] = s.residual_eq15;
    return d;
}

py::dict chsh_dict(const ChshReport &r) {
    py::dict d;
    d["B12"] = r.B12;
    d["B23"] = r.B23;
    d["total"] = r.total;
    d["bound_h"] = r.bound_h;
    d["bound_o"] = r.bound_o;
    return d;
}

}  // namespace

PYBIND11_MODULE(_mdrlab, m) {
    m.doc() = "Correlation-function measurement-disturbance toolkit";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<ZeroProbabilityError>(m, "ZeroProbabilityError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    m.def("pauli_op", [](const Triple &a) -> Eigen::MatrixXcd { return pauli_op(vec(a)).matrix(); }, py::arg("a"),
          "2x2 matrix of sigma . a.");
    m.def("bell_state", [](int mi, const Triple &c) { return array_of(bell_state(BellPairSpec::make(mi, vec(c)))); },
          py::arg("m"), py::arg("c_hat"), "Two-qubit Bell pair relative to the c axis.");
    m.def(
        "project_prepare",
        [](const Eigen::VectorXcd &psi12, const Triple &n_p, int sign) {
            PreparedBranch b = project_prepare(ket_of(psi12), vec(n_p), sign >= 0 ? Sign::Plus : Sign::Minus);
            return std::make_tuple(b.prob, array_of(b.psi1));
        },
        py::arg("psi12"), py::arg("n_p"), py::arg("sign") = 1, "Returns (probability, signal state).");
    m.def(
        "evaluate_scenario",
        [](int mi, const Triple &a, const Triple &b, const Triple &n_p, const Eigen::VectorXcd &meter,
           const Eigen::MatrixXcd &u13) {
            Scenario s = Scenario::make(mi, vec(a), vec(b), vec(n_p), ket_of(meter), Op::unitary(Matrix(u13)));
            return sample_dict(evaluate_scenario(s));
        },
        py::arg("m"), py::arg("a"), py::arg("b"), py::arg("n_p"), py::arg("meter"), py::arg("u13"));
    m.def(
        "evaluate_cnot", [](double theta3, double theta_p) { return sample_dict(evaluate_scenario(cnot_scenario(theta3, theta_p))); },
        py::arg("theta3"), py::arg("theta_p") = 0.0, "Sample for the standard CNOT measurement.");
    m.def("cnot_u13", []() -> Eigen::MatrixXcd { return cnot_u13().matrix(); });
    m.def(
        "theorem2_bound",
        [](const Triple &a, const Triple &b, const Triple &n_p, const std::string &kind) {
            return theorem2_bound(vec(a), vec(b), vec(n_p), kind_of(kind));
        },
        py::arg("a"), py::arg("b"), py::arg("n_p"), py::arg("kind"));
    m.def(
        "vertex_min_radius",
        [](double dA, double dB, double c, const std::string &kind) { return vertex_min_radius(dA, dB, c, kind_of(kind)); },
        py::arg("dA"), py::arg("dB"), py::arg("c"), py::arg("kind"));
    m.def(
        "chsh_composite",
        [](const Eigen::VectorXcd &psi123, const Triple &a, const Triple &b, const Triple &n_p) {
            return chsh_dict(chsh_composite(ket_of(psi123), vec(a), vec(b), vec(n_p)));
        },
        py::arg("psi123"), py::arg("a"), py::arg("b"), py::arg("n_p") = Triple{0, 1, 0});
    m.def(
        "post_interaction_cnot",
        [](double theta3) { return array_of(post_interaction_state(cnot_scenario(theta3, 0.0))); },
        py::arg("theta3"));
    m.def(
        "_run",
        [](const std::string &config_json) {
            RunConfig cfg;
            try {
                cfg = RunConfig::from_json(Json::parse(config_json));
            } catch (const Json::exception &e) {
                throw ConfigError(e.what());
            }
            RunOutcome out;
            {
                py::gil_scoped_release release;
                out = run(cfg);
            }
            return std::make_tuple(out.exit_code, out.report.to_json().dump(), out.csv);
        },
        py::arg("config_json"));
}
