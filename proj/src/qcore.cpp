#include "mdrlab/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mdrlab {

namespace {

int qubits_for_dim(Eigen::Index dim) {
    switch (dim) {
        case 2: return 1;
        case 4: return 2;
        case 8: return 3;
        default: throw DimensionError("dimension " + std::to_string(dim) + " is not 2, 4 or 8");
    }
}

void fix_phase(Amplitudes &v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double mag = std::abs(v(i));
        if (mag > 1e-12) {
            v *= std::conj(v(i)) / mag;
            v(i) = Cplx(mag, 0.0);
            return;
        }
    }
}

}  // namespace

double Vec3::norm() const { return std::sqrt(norm_sq()); }

bool Vec3::is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }

Vec3 Vec3::normalized() const {
    double n = norm();
    if (!(n > 0.0)) {
        throw DomainError("cannot normalize the zero vector");
    }
    return *this / n;
}

Ket Ket::from_amplitudes(Amplitudes amps, double tol) {
    int n = qubits_for_dim(amps.size());
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        if (!std::isfinite(amps(i).real()) || !std::isfinite(amps(i).imag())) {
            throw DomainError("non-finite amplitude");
        }
    }
    double norm_sq = amps.squaredNorm();
    if (std::abs(norm_sq - 1.0) > tol) {
        throw DomainError("ket is not normalized (norm^2 = " + std::to_string(norm_sq) + ")");
    }
    return Ket(n, std::move(amps));
}

Ket Ket::normalized(Amplitudes amps) {
    double n = amps.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError("cannot normalize a zero or non-finite vector");
    }
    amps /= n;
    return from_amplitudes(std::move(amps));
}

Ket Ket::basis(int n_qubits, int index) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw DimensionError("qubit count must be 1..3");
    }
    int dim = 1 << n_qubits;
    if (index < 0 || index >= dim) {
        throw DomainError("basis index out of range");
    }
    Amplitudes amps = Amplitudes::Zero(dim);
    amps(index) = 1.0;
    return Ket(n_qubits, std::move(amps));
}

Ket Ket::tensor(const Ket &other) const {
    int n = n_qubits_ + other.n_qubits_;
    if (n > kMaxQubits) {
        throw DimensionError("tensor product exceeds three qubits");
    }
    Amplitudes out(dim() * other.dim());
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < other.dim(); ++j) {
            out(i * other.dim() + j) = amps_(i) * other.amps_(j);
        }
    }
    return Ket(n, std::move(out));
}

Cplx Ket::inner(const Ket &other) const {
    if (dim() != other.dim()) {
        throw DimensionError("inner product of kets with different dimensions");
    }
    return amps_.dot(other.amps_);
}

bool is_hermitian_matrix(const Matrix &m, double tol) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary_matrix(const Matrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    Matrix eye = Matrix::Identity(m.rows(), m.cols());
    return (m.adjoint() * m - eye).cwiseAbs().maxCoeff() <= tol;
}

Op::Op(Matrix m, bool hermitian, bool unitary) : m_(std::move(m)), hermitian_(hermitian), unitary_(unitary) {
    if (m_.rows() != m_.cols()) {
        throw DimensionError("operator matrix must be square");
    }
    qubits_for_dim(m_.rows());
    for (Eigen::Index i = 0; i < m_.size(); ++i) {
        Cplx v = m_.data()[i];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw DomainError("non-finite operator entry");
        }
    }
    if (hermitian_ && !is_hermitian_matrix(m_)) {
        throw DomainError("operator declared hermitian is not");
    }
    if (unitary_ && !is_unitary_matrix(m_)) {
        throw DomainError("operator declared unitary is not");
    }
}

Op Op::general(Matrix m) { return Op(std::move(m), false, false); }
Op Op::hermitian(Matrix m) { return Op(std::move(m), true, false); }
Op Op::unitary(Matrix m) { return Op(std::move(m), false, true); }

Op Op::identity(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw DimensionError("qubit count must be 1..3");
    }
    int dim = 1 << n_qubits;
    return Op(Matrix::Identity(dim, dim), true, true);
}

int Op::n_qubits() const { return qubits_for_dim(m_.rows()); }

Ket Op::apply(const Ket &psi) const {
    if (!unitary_) {
        throw DomainError("apply() needs a unitary operator; use act() for general ones");
    }
    return Ket::normalized(act(psi.amplitudes()));
}

Amplitudes Op::act(const Amplitudes &amps) const {
    if (amps.size() != m_.cols()) {
        throw DimensionError("operator and state dimensions differ");
    }
    return m_ * amps;
}

Op operator*(const Op &lhs, const Op &rhs) {
    if (lhs.dim() != rhs.dim()) {
        throw DimensionError("operator product with mismatched dimensions");
    }
    return Op::general(lhs.matrix() * rhs.matrix());
}

Op pauli_op(const Vec3 &a) {
    if (!a.is_finite()) {
        throw DomainError("non-finite Pauli axis");
    }
    Matrix m(2, 2);
    m << Cplx(a.z, 0.0), Cplx(a.x, -a.y),
         Cplx(a.x, a.y), Cplx(-a.z, 0.0);
    return Op::hermitian(std::move(m));
}

Op commutator(const Op &a, const Op &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("commutator of operators with different dimensions");
    }
    return Op::general(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

Op anticommutator(const Op &a, const Op &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("anticommutator of operators with different dimensions");
    }
    return Op::general(a.matrix() * b.matrix() + b.matrix() * a.matrix());
}

SpinBasis spin_eigenbasis(const Vec3 &n_p) {
    if (!n_p.is_finite() || std::abs(n_p.norm() - 1.0) > kFlagTolerance) {
        throw DomainError("spin axis must be a unit vector");
    }
    const auto &[x, y, z] = n_p;
    Amplitudes plus(2), minus(2);
    // Two algebraically equivalent forms; pick the one away from its pole.
    if (z >= 0.0) {
        plus << Cplx(1.0 + z, 0.0), Cplx(x, y);
        minus << Cplx(-x, y), Cplx(1.0 + z, 0.0);
    } else {
        plus << Cplx(x, -y), Cplx(1.0 - z, 0.0);
        minus << Cplx(1.0 - z, 0.0), Cplx(-x, -y);
    }
    plus.normalize();
    minus.normalize();
    fix_phase(plus);
    fix_phase(minus);
    return {Ket::from_amplitudes(std::move(plus)), Ket::from_amplitudes(std::move(minus))};
}

Op projector(const Ket &v) {
    const Amplitudes &a = v.amplitudes();
    return Op::hermitian(a * a.adjoint());
}

Op embed(const Op &op, std::span<const int> sites, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw DimensionError("qubit count must be 1..3");
    }
    int k = static_cast<int>(sites.size());
    if (k == 0 || op.dim() != (1 << k)) {
        throw DimensionError("operator dimension does not match the number of sites");
    }
    for (int i = 0; i < k; ++i) {
        if (sites[i] < 1 || sites[i] > n_qubits) {
            throw DomainError("site index out of range");
        }
        for (int j = 0; j < i; ++j) {
            if (sites[i] == sites[j]) {
                throw DomainError("duplicate site index");
            }
        }
    }

    const int dim = 1 << n_qubits;
    // Bit position (from the least significant end) of each site.
    std::vector<int> shift(k);
    int site_mask = 0;
    for (int i = 0; i < k; ++i) {
        shift[i] = n_qubits - sites[i];
        site_mask |= 1 << shift[i];
    }
    auto local_index = [&](int global) {
        int local = 0;
        for (int i = 0; i < k; ++i) {
            local = (local << 1) | ((global >> shift[i]) & 1);
        }
        return local;
    };

    Matrix full = Matrix::Zero(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            if ((r & ~site_mask) != (c & ~site_mask)) {
                continue;
            }
            full(r, c) = op.matrix()(local_index(r), local_index(c));
        }
    }
    return Op(std::move(full), op.is_hermitian(), op.is_unitary());
}

Op embed(const Op &op, std::initializer_list<int> sites, int n_qubits) {
    return embed(op, std::span<const int>(sites.begin(), sites.size()), n_qubits);
}

double expectation(const Ket &psi, const Op &x) {
    if (!x.is_hermitian()) {
        throw DomainError("expectation needs a hermitian observable");
    }
    if (psi.dim() != x.dim()) {
        throw DimensionError("observable and state dimensions differ");
    }
    Cplx value = psi.amplitudes().dot(x.matrix() * psi.amplitudes());
    if (std::abs(value.imag()) > kFlagTolerance) {
        throw NumericalError("expectation of a hermitian operator has imaginary part " +
                             std::to_string(value.imag()));
    }
    return value.real();
}

double correlation(const Ket &psi, const Op &x, int site_i, const Op &y, int site_j) {
    if (site_i == site_j) {
        throw DomainError("correlation needs two distinct sites");
    }
    if (psi.n_qubits() < 2) {
        throw DimensionError("correlation needs at least two qubits");
    }
    if (x.dim() != 2 || y.dim() != 2) {
        throw DimensionError("correlation takes single-qubit observables");
    }
    if (!x.is_hermitian() || !y.is_hermitian()) {
        throw DomainError("correlation needs hermitian observables");
    }
    int n = psi.n_qubits();
    Op xi = embed(x, {site_i}, n);
    Op yj = embed(y, {site_j}, n);
    return expectation(psi, Op::hermitian(xi.matrix() * yj.matrix()));
}

}  // namespace mdrlab
