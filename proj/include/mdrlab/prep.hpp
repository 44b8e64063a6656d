#pragma once

// Entangled source pairs and projective preparation of signal states.

#include "mdrlab/qcore.hpp"

namespace mdrlab {

/// Two-qubit maximally entangled pair relative to the c axis:
/// (|+>_c|->_c + (-1)^m |->_c|+>_c) / sqrt(2).
struct BellPairSpec {
    int m = 0;
    Vec3 c_hat = kYAxis;

    /// Validates m in {0, 1} and |c_hat| = 1.
    static BellPairSpec make(int m, const Vec3 &c_hat);
    /// c_hat = (a x b) / |a x b|; throws DegenerateAxesError when |a x b| < 1e-10.
    static BellPairSpec from_axes(int m, const Vec3 &a, const Vec3 &b);
};

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

struct PreparedBranch {
    Sign sign;
    double prob;
    Ket psi1;
};

inline constexpr double kDegenerateCross = 1e-10;

Ket bell_state(const BellPairSpec &spec);

/// || (V (x) V) psi - (-1)^m psi || for V = sigma . v with v a unit vector
/// perpendicular to spec.c_hat.
double verify_inplane_symmetry(const Ket &psi, const BellPairSpec &spec, const Vec3 &v);

/// Projects qubit 2 of psi12 on the `sign` eigenvector of sigma . n_p and
/// returns the normalized state left on qubit 1 with its probability.
PreparedBranch project_prepare(const Ket &psi12, const Vec3 &n_p, Sign sign);

}  // namespace mdrlab
