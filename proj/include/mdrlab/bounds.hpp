#pragma once

// Uncertainty and measurement-disturbance inequalities, written as
// lhs <= bound with margin = bound - lhs.

#include <nlohmann/json.hpp>

#include "mdrlab/mdr.hpp"

namespace mdrlab {

/// Which measurement-disturbance relation an expression is built from.
enum class MdrKind { Heisenberg, Ozawa };

enum class BoundKind { Heisenberg, Ozawa, Theorem1, RS };

const char *to_string(MdrKind k);
const char *to_string(BoundKind k);
BoundKind bound_kind(MdrKind k);

struct BoundReport {
    double lhs = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    BoundKind kind = BoundKind::RS;
    /// Descriptor of the state or scenario that produced the numbers.
    nlohmann::ordered_json params;

    static BoundReport make(double lhs, double bound, BoundKind kind, nlohmann::ordered_json params = {}) {
        return {lhs, bound, bound - lhs, kind, std::move(params)};
    }
};

struct ChshReport {
    double B12 = 0.0;
    double B23 = 0.0;
    double total = 0.0;
    double bound_h = 0.0;
    double bound_o = 0.0;
};

/// kappa in the correlation bounds: 1 for Heisenberg, (sqrt2 - 1)^2 for Ozawa.
double kappa(MdrKind kind);

/// Robertson-Schrodinger for A = sigma.a, B = sigma.b on a single qubit.
/// lhs = (<{A,B}>/2 - <A><B>)^2 + |<[A,B]>|^2/4, bound = (dA dB)^2.
BoundReport rs_check(const Ket &psi, const Vec3 &a, const Vec3 &b);

/// |a|^2 |b|^2 - (a.b)^2.
double gram_area_sq(const Vec3 &a, const Vec3 &b);

/// |E(A1,P2) b - E(B1,P2) a|^2 + E(C1,P2)^2 against the squared parallelogram
/// area spanned by a and b.
BoundReport theorem1_check(const Ket &psi12, const Vec3 &a, const Vec3 &b, const Vec3 &n_p);

/// |a|^2 + |b|^2 - kappa |n_p . (a x b)|.
double theorem2_bound(const Vec3 &a, const Vec3 &b, const Vec3 &n_p, MdrKind kind);

/// lhs = (-1)^m [E(A2,A3) + E(B1,B2)] against theorem2_bound. Heisenberg
/// margins can be negative; that is an expected outcome, not an error.
BoundReport theorem2_check(const MdrSample &sample, const Scenario &s, MdrKind kind);

/// Left side of the per-branch relation: eps*eta for Heisenberg,
/// eps*eta + eps*dB + eta*dA for Ozawa.
double mdr_lhs(double eps, double eta, double dA, double dB, MdrKind kind);

/// min eps^2 + eta^2 over eps, eta >= 0 with mdr_lhs(eps, eta, dA, dB) >= c.
double vertex_min_radius(double dA, double dB, double c, MdrKind kind);

/// Sum of the (1,2) and (2,3) CHSH expressions with unit primed axes
/// a' = (a+b)/sqrt2, b' = (b-a)/sqrt2. a and b must be orthonormal. The
/// bounds are 2 sqrt2 K for each kind, with K evaluated at n_p.
ChshReport chsh_composite(const Ket &psi123, const Vec3 &a, const Vec3 &b, const Vec3 &n_p = kYAxis);

/// E(A2,A3) + E(B1,B2) on the post-interaction state plus |E(C1,P2)| on the
/// bare Bell pair. Heisenberg-type reasoning would cap this at |a|^2 + |b|^2.
double heisenberg_composite(const MdrSample &sample, const Scenario &s);

}  // namespace mdrlab
