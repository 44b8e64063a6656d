#include "mdrlab/prep.hpp"

#include <algorithm>
#include <cmath>

namespace mdrlab {

BellPairSpec BellPairSpec::make(int m, const Vec3 &c_hat) {
    if (m != 0 && m != 1) {
        throw DomainError("Bell-pair index m must be 0 or 1");
    }
    if (!c_hat.is_finite() || std::abs(c_hat.norm() - 1.0) > kFlagTolerance) {
        throw DomainError("Bell-pair axis must be a unit vector");
    }
    return {m, c_hat};
}

BellPairSpec BellPairSpec::from_axes(int m, const Vec3 &a, const Vec3 &b) {
    Vec3 c = a.cross(b);
    double len = c.norm();
    if (!(len >= kDegenerateCross)) {
        throw DegenerateAxesError("observable axes are parallel; a x b vanishes");
    }
    return make(m, c / len);
}

Ket bell_state(const BellPairSpec &spec) {
    auto [plus, minus] = spin_eigenbasis(spec.c_hat);
    const double parity = spec.m == 0 ? 1.0 : -1.0;
    Amplitudes amps = (plus.tensor(minus).amplitudes() + parity * minus.tensor(plus).amplitudes()) / std::sqrt(2.0);
    return Ket::normalized(std::move(amps));
}

double verify_inplane_symmetry(const Ket &psi, const BellPairSpec &spec, const Vec3 &v) {
    if (psi.n_qubits() != 2) {
        throw DimensionError("in-plane symmetry is a two-qubit property");
    }
    if (std::abs(v.norm() - 1.0) > kFlagTolerance) {
        throw DomainError("symmetry axis must be a unit vector");
    }
    if (std::abs(v.dot(spec.c_hat)) > kFlagTolerance) {
        throw DomainError("symmetry axis is not in the a-b plane");
    }
    Op vv = pauli_op(v);
    Op both = embed(vv, {1}, 2) * embed(vv, {2}, 2);
    const double parity = spec.m == 0 ? 1.0 : -1.0;
    return (both.act(psi.amplitudes()) - parity * psi.amplitudes()).norm();
}

PreparedBranch project_prepare(const Ket &psi12, const Vec3 &n_p, Sign sign) {
    if (psi12.n_qubits() != 2) {
        throw DimensionError("projective preparation needs a two-qubit state");
    }
    SpinBasis basis = spin_eigenbasis(n_p);
    const Ket &v = sign == Sign::Plus ? basis.plus : basis.minus;
    // (I (x) <v|) psi12: contract qubit 2 (least significant bit).
    Amplitudes out(2);
    for (int q1 = 0; q1 < 2; ++q1) {
        out(q1) = std::conj(v[0]) * psi12[2 * q1] + std::conj(v[1]) * psi12[2 * q1 + 1];
    }
    double norm = out.norm();
    if (!(norm > 1e-12)) {
        throw ZeroProbabilityError("projection branch has zero probability");
    }
    return {sign, std::min(norm * norm, 1.0), Ket::normalized(std::move(out))};
}

}  // namespace mdrlab
