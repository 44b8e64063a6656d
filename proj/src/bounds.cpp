#include "mdrlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mdrlab/golden.hpp"

namespace mdrlab {

const char *to_string(MdrKind k) { return k == MdrKind::Heisenberg ? "heisenberg" : "ozawa"; }

const char *to_string(BoundKind k) {
    switch (k) {
        case BoundKind::Heisenberg: return "heisenberg";
        case BoundKind::Ozawa: return "ozawa";
        case BoundKind::Theorem1: return "theorem1";
        case BoundKind::RS: return "rs";
    }
    return "unknown";
}

BoundKind bound_kind(MdrKind k) { return k == MdrKind::Heisenberg ? BoundKind::Heisenberg : BoundKind::Ozawa; }

double kappa(MdrKind kind) {
    const double s = std::numbers::sqrt2 - 1.0;
    return kind == MdrKind::Heisenberg ? 1.0 : s * s;
}

BoundReport rs_check(const Ket &psi, const Vec3 &a, const Vec3 &b) {
    if (psi.n_qubits() != 1) {
        throw DimensionError("Robertson-Schrodinger check takes a single-qubit state");
    }
    const Op A = pauli_op(a);
    const Op B = pauli_op(b);
    const Amplitudes &v = psi.amplitudes();
    const double mean_a = expectation(psi, A);
    const double mean_b = expectation(psi, B);
    const double var_a = expectation(psi, Op::hermitian(A.matrix() * A.matrix())) - mean_a * mean_a;
    const double var_b = expectation(psi, Op::hermitian(B.matrix() * B.matrix())) - mean_b * mean_b;
    const Cplx anti = v.dot(anticommutator(A, B).matrix() * v);
    const Cplx comm = v.dot(commutator(A, B).matrix() * v);
    const double cov = 0.5 * anti.real() - mean_a * mean_b;
    const double lhs = cov * cov + 0.25 * std::norm(comm);
    return BoundReport::make(lhs, var_a * var_b, BoundKind::RS);
}

double gram_area_sq(const Vec3 &a, const Vec3 &b) {
    const double ab = a.dot(b);
    return a.norm_sq() * b.norm_sq() - ab * ab;
}

BoundReport theorem1_check(const Ket &psi12, const Vec3 &a, const Vec3 &b, const Vec3 &n_p) {
    if (psi12.n_qubits() != 2) {
        throw DimensionError("bipartite correlation bound takes a two-qubit state");
    }
    if (std::abs(n_p.norm() - 1.0) > kFlagTolerance) {
        throw DomainError("projection axis must be a unit vector");
    }
    const Op p = pauli_op(n_p);
    const double e_ap = correlation(psi12, pauli_op(a), 1, p, 2);
    const double e_bp = correlation(psi12, pauli_op(b), 1, p, 2);
    const double e_cp = correlation(psi12, pauli_op(a.cross(b)), 1, p, 2);
    const double lhs = (e_ap * b - e_bp * a).norm_sq() + e_cp * e_cp;
    return BoundReport::make(lhs, gram_area_sq(a, b), BoundKind::Theorem1);
}

double theorem2_bound(const Vec3 &a, const Vec3 &b, const Vec3 &n_p, MdrKind kind) {
    if (std::abs(n_p.norm() - 1.0) > kFlagTolerance) {
        throw DomainError("projection axis must be a unit vector");
    }
    return a.norm_sq() + b.norm_sq() - kappa(kind) * std::abs(n_p.dot(a.cross(b)));
}

BoundReport theorem2_check(const MdrSample &sample, const Scenario &s, MdrKind kind) {
    if (sample.m != s.m() || !(sample.a == s.a()) || !(sample.b == s.b()) || !(sample.n_p == s.n_p())) {
        throw DomainError("sample was not produced from this scenario");
    }
    const double parity = s.m() == 0 ? 1.0 : -1.0;
    const double lhs = parity * (sample.E_A2A3 + sample.E_B1B2);
    return BoundReport::make(lhs, theorem2_bound(s.a(), s.b(), s.n_p(), kind), bound_kind(kind));
}

double mdr_lhs(double eps, double eta, double dA, double dB, MdrKind kind) {
    if (eps < 0.0 || eta < 0.0 || dA < 0.0 || dB < 0.0) {
        throw DomainError("precision, disturbance and deviations must be non-negative");
    }
    double lhs = eps * eta;
    if (kind == MdrKind::Ozawa) {
        lhs += eps * dB + eta * dA;
    }
    return lhs;
}

double vertex_min_radius(double dA, double dB, double c, MdrKind kind) {
    if (dA < 0.0 || dB < 0.0 || c < 0.0 || !std::isfinite(dA) || !std::isfinite(dB) || !std::isfinite(c)) {
        throw DomainError("vertex radius needs finite non-negative dA, dB, c");
    }
    if (c == 0.0) {
        return 0.0;
    }
    if (kind == MdrKind::Heisenberg) {
        dA = 0.0;
        dB = 0.0;
    }
    // On the boundary eps*eta + eps*dB + eta*dA = c, eta is a convex
    // decreasing function of eps; eps^2 + eta^2 is convex along it.
    auto eta_of = [&](double eps) { return std::max(0.0, (c - eps * dB) / (eps + dA)); };
    auto radius = [&](double eps) {
        double eta = eta_of(eps);
        return eps * eps + eta * eta;
    };
    // The minimizer lies at or below sqrt(c), or at the eta = 0 intercept.
    double hi = 2.0 * std::sqrt(c);
    if (dB > 0.0) {
        hi = std::min(hi, c / dB);
    }
    GoldenResult best = golden_section_minimize(radius, 0.0, hi, 1e-10 * std::max(1.0, hi));
    if (dA > 0.0) {
        // eps = 0 is admissible when dA > 0 and the search never evaluates it.
        best.fx = std::min(best.fx, radius(0.0));
    }
    best.fx = std::min(best.fx, radius(hi));
    return best.fx;
}

ChshReport chsh_composite(const Ket &psi123, const Vec3 &a, const Vec3 &b, const Vec3 &n_p) {
    if (psi123.n_qubits() != 3) {
        throw DimensionError("CHSH composite takes a three-qubit state");
    }
    if (std::abs(a.norm() - 1.0) > kFlagTolerance || std::abs(b.norm() - 1.0) > kFlagTolerance ||
        std::abs(a.dot(b)) > kFlagTolerance) {
        throw DomainError("CHSH composite needs orthonormal axes");
    }
    const Op A = pauli_op(a);
    const Op B = pauli_op(b);
    const Op Ap = pauli_op((a + b) / std::numbers::sqrt2);
    const Op Bp = pauli_op((b - a) / std::numbers::sqrt2);
    auto chsh = [&](int i, int j) {
        return correlation(psi123, A, i, Ap, j) - correlation(psi123, A, i, Bp, j) +
               correlation(psi123, B, i, Ap, j) + correlation(psi123, B, i, Bp, j);
    };
    ChshReport r;
    r.B12 = chsh(1, 2);
    r.B23 = chsh(2, 3);
    r.total = r.B12 + r.B23;
    r.bound_h = 2.0 * std::numbers::sqrt2 * theorem2_bound(a, b, n_p, MdrKind::Heisenberg);
    r.bound_o = 2.0 * std::numbers::sqrt2 * theorem2_bound(a, b, n_p, MdrKind::Ozawa);
    return r;
}

double heisenberg_composite(const MdrSample &sample, const Scenario &s) {
    const Ket pair = bell_state(s.pair());
    const double e_cp = correlation(pair, pauli_op(s.c()), 1, pauli_op(s.n_p()), 2);
    return sample.E_A2A3 + sample.E_B1B2 + std::abs(e_cp);
}

}  // namespace mdrlab
