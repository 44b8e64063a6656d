#pragma once

// Measurement interaction between a prepared signal qubit and a meter qubit,
// and the root-mean-square error/disturbance functionals it induces.
//
// Qubit roles in the tripartite picture: 1 = signal, 2 = the Bell-pair
// partner used for preparation, 3 = meter. The meter reads A directly.

#include "mdrlab/prep.hpp"

namespace mdrlab {

class Scenario {
  public:
    /// Throws DegenerateAxesError for |a x b| < 1e-10, DomainError for a
    /// non-unit n_p, non-unitary interaction or bad m.
    static Scenario make(int m, const Vec3 &a, const Vec3 &b, const Vec3 &n_p, Ket meter, Op u13);

    int m() const { return m_; }
    const Vec3 &a() const { return a_; }
    const Vec3 &b() const { return b_; }
    const Vec3 &n_p() const { return n_p_; }
    const Ket &meter() const { return meter_; }
    const Op &u13() const { return u13_; }
    Vec3 c() const { return a_.cross(b_); }
    BellPairSpec pair() const { return BellPairSpec::from_axes(m_, a_, b_); }

  private:
    Scenario(int m, Vec3 a, Vec3 b, Vec3 n_p, Ket meter, Op u13);

    int m_;
    Vec3 a_, b_, n_p_;
    Ket meter_;
    Op u13_;
};

struct MdrSample {
    // Echo of the scenario parameters the sample was computed from.
    int m = 0;
    Vec3 a, b, n_p;

    double prob_plus = 0.0, prob_minus = 0.0;
    double eps_plus_sq = 0.0, eps_minus_sq = 0.0;
    double eta_plus_sq = 0.0, eta_minus_sq = 0.0;
    double eps_plus = 0.0, eps_minus = 0.0;
    double eta_plus = 0.0, eta_minus = 0.0;
    double dA_plus = 0.0, dA_minus = 0.0;
    double dB_plus = 0.0, dB_minus = 0.0;
    double commutator_mean_plus = 0.0, commutator_mean_minus = 0.0;
    double E_A2A3 = 0.0, E_B1B2 = 0.0;
    double residual_eq15 = 0.0;
};

/// Controlled-NOT with the signal (first qubit of the pair) as control in
/// the z basis and the meter as target.
Op cnot_u13();

/// cos(theta3)|+> + sin(theta3)|->.
Ket meter_state(double theta3);

/// The standard CNOT measurement of A = sigma_z with disturbance on
/// B = sigma_x, m = 0, meter_state(theta3), n_p = (sin tp, cos tp, 0) so that
/// tp is the angle between n_p and a x b = y.
Scenario cnot_scenario(double theta3, double theta_p);

/// U13 (|psi12^(m)> (x) |meter>), with U13 acting on qubits 1 and 3.
Ket post_interaction_state(const Scenario &s);

/// < [U13^dag (I (x) A) U13 - A (x) I]^2 > on |psi1>|meter>.
double precision_epsilon_sq(const Ket &psi1, const Ket &meter, const Op &u13, const Op &a);
/// < [U13^dag (B (x) I) U13 - B (x) I]^2 > on |psi1>|meter>.
double disturbance_eta_sq(const Ket &psi1, const Ket &meter, const Op &u13, const Op &b);

double precision_epsilon(const Ket &psi1, const Ket &meter, const Op &u13, const Op &a);
double disturbance_eta(const Ket &psi1, const Ket &meter, const Op &u13, const Op &b);

/// sqrt(<X^2> - <X>^2). Round-off negatives down to -1e-12 clamp to zero.
double std_dev(const Ket &psi, const Op &x);

MdrSample evaluate_scenario(const Scenario &s);

}  // namespace mdrlab
