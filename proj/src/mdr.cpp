#include "mdrlab/mdr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mdrlab {

namespace {

void check_single_qubit(const Ket &k, const char *what) {
    if (k.n_qubits() != 1) {
        throw DimensionError(std::string(what) + " must be a single-qubit state");
    }
}

void check_interaction(const Op &u13) {
    if (u13.dim() != 4 || !u13.is_unitary()) {
        throw DomainError("interaction must be a two-qubit unitary");
    }
}

// <psi| D^dag D |psi> = ||D psi||^2 with D = U^dag (lhs) U - rhs on |psi1>|meter>.
double quadratic_form(const Ket &psi1, const Ket &meter, const Op &u13, const Matrix &inside, const Matrix &outside) {
    check_single_qubit(psi1, "signal");
    check_single_qubit(meter, "meter");
    check_interaction(u13);
    const Matrix &u = u13.matrix();
    Matrix d = u.adjoint() * inside * u - outside;
    Amplitudes psi = psi1.tensor(meter).amplitudes();
    return (d * psi).squaredNorm();
}

Matrix kron(const Matrix &x, const Matrix &y) {
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return out;
}

void check_observable(const Op &x) {
    if (x.dim() != 2 || !x.is_hermitian()) {
        throw DomainError("observable must be a hermitian single-qubit operator");
    }
}

}  // namespace

Scenario::Scenario(int m, Vec3 a, Vec3 b, Vec3 n_p, Ket meter, Op u13)
    : m_(m), a_(a), b_(b), n_p_(n_p), meter_(std::move(meter)), u13_(std::move(u13)) {}

Scenario Scenario::make(int m, const Vec3 &a, const Vec3 &b, const Vec3 &n_p, Ket meter, Op u13) {
    if (m != 0 && m != 1) {
        throw DomainError("Bell-pair index m must be 0 or 1");
    }
    if (!a.is_finite() || !b.is_finite()) {
        throw DomainError("observable axes must be finite");
    }
    if (a.cross(b).norm() < kDegenerateCross) {
        throw DegenerateAxesError("observable axes are parallel; a x b vanishes");
    }
    if (!n_p.is_finite() || std::abs(n_p.norm() - 1.0) > kFlagTolerance) {
        throw DomainError("projection axis must be a unit vector");
    }
    check_single_qubit(meter, "meter");
    check_interaction(u13);
    return Scenario(m, a, b, n_p, std::move(meter), std::move(u13));
}

Op cnot_u13() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return Op::unitary(std::move(m));
}

Ket meter_state(double theta3) {
    Amplitudes amps(2);
    amps << std::cos(theta3), std::sin(theta3);
    return Ket::from_amplitudes(std::move(amps));
}

Scenario cnot_scenario(double theta3, double theta_p) {
    Vec3 n_p{std::sin(theta_p), std::cos(theta_p), 0.0};
    return Scenario::make(0, kZAxis, kXAxis, n_p.normalized(), meter_state(theta3), cnot_u13());
}

Ket post_interaction_state(const Scenario &s) {
    Ket pair = bell_state(s.pair());
    Ket joint = pair.tensor(s.meter());
    return embed(s.u13(), {1, 3}, 3).apply(joint);
}

double precision_epsilon_sq(const Ket &psi1, const Ket &meter, const Op &u13, const Op &a) {
    check_observable(a);
    Matrix eye = Matrix::Identity(2, 2);
    return quadratic_form(psi1, meter, u13, kron(eye, a.matrix()), kron(a.matrix(), eye));
}

double disturbance_eta_sq(const Ket &psi1, const Ket &meter, const Op &u13, const Op &b) {
    check_observable(b);
    Matrix eye = Matrix::Identity(2, 2);
    Matrix b1 = kron(b.matrix(), eye);
    return quadratic_form(psi1, meter, u13, b1, b1);
}

double precision_epsilon(const Ket &psi1, const Ket &meter, const Op &u13, const Op &a) {
    return std::sqrt(precision_epsilon_sq(psi1, meter, u13, a));
}

double disturbance_eta(const Ket &psi1, const Ket &meter, const Op &u13, const Op &b) {
    return std::sqrt(disturbance_eta_sq(psi1, meter, u13, b));
}

double std_dev(const Ket &psi, const Op &x) {
    double mean = expectation(psi, x);
    double second = expectation(psi, Op::hermitian(x.matrix() * x.matrix()));
    double var = second - mean * mean;
    if (var < -1e-12) {
        throw NumericalError("negative variance " + std::to_string(var));
    }
    return std::sqrt(std::max(var, 0.0));
}

MdrSample evaluate_scenario(const Scenario &s) {
    MdrSample out;
    out.m = s.m();
    out.a = s.a();
    out.b = s.b();
    out.n_p = s.n_p();

    const Op a = pauli_op(s.a());
    const Op b = pauli_op(s.b());
    const Op c = pauli_op(s.c());
    const Ket pair = bell_state(s.pair());

    auto branch = [&](Sign sign, double &prob, double &eps_sq, double &eta_sq, double &da, double &db, double &cm) {
        PreparedBranch br = project_prepare(pair, s.n_p(), sign);
        prob = br.prob;
        eps_sq = precision_epsilon_sq(br.psi1, s.meter(), s.u13(), a);
        eta_sq = disturbance_eta_sq(br.psi1, s.meter(), s.u13(), b);
        da = std_dev(br.psi1, a);
        db = std_dev(br.psi1, b);
        cm = std::abs(expectation(br.psi1, c));
    };
    branch(Sign::Plus, out.prob_plus, out.eps_plus_sq, out.eta_plus_sq, out.dA_plus, out.dB_plus,
           out.commutator_mean_plus);
    branch(Sign::Minus, out.prob_minus, out.eps_minus_sq, out.eta_minus_sq, out.dA_minus, out.dB_minus,
           out.commutator_mean_minus);
    out.eps_plus = std::sqrt(out.eps_plus_sq);
    out.eps_minus = std::sqrt(out.eps_minus_sq);
    out.eta_plus = std::sqrt(out.eta_plus_sq);
    out.eta_minus = std::sqrt(out.eta_minus_sq);

    const Ket psi123 = post_interaction_state(s);
    out.E_A2A3 = correlation(psi123, a, 2, a, 3);
    out.E_B1B2 = correlation(psi123, b, 1, b, 2);

    const double parity = s.m() == 0 ? 1.0 : -1.0;
    double correlation_side = s.a().norm_sq() + s.b().norm_sq() - parity * (out.E_A2A3 + out.E_B1B2);
    double functional_side = 0.25 * (out.eps_plus_sq + out.eta_plus_sq + out.eps_minus_sq + out.eta_minus_sq);
    out.residual_eq15 = std::abs(correlation_side - functional_side);
    return out;
}

}  // namespace mdrlab
