#pragma once

// Dense complex linear algebra for one to three qubits.
//
// Amplitude ordering: qubit 1 is the most significant bit of the amplitude
// index, so |q1 q2 q3> lives at 4*q1 + 2*q2 + q3 with |+> -> 0 and |-> -> 1.
// Sites are 1-based everywhere in the public API.

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mdrlab/errors.hpp"

namespace mdrlab {

using Cplx = std::complex<double>;

inline constexpr int kMaxQubits = 3;
inline constexpr int kMaxDim = 1 << kMaxQubits;
inline constexpr double kFlagTolerance = 1e-10;

using Amplitudes = Eigen::Matrix<Cplx, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Matrix = Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3 &o) const { return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x}; }
    double norm_sq() const { return dot(*this); }
    double norm() const;
    bool is_finite() const;
    /// Throws DomainError for the zero vector.
    Vec3 normalized() const;

    friend Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator-(const Vec3 &a) { return {-a.x, -a.y, -a.z}; }
    friend Vec3 operator*(double s, const Vec3 &a) { return {s * a.x, s * a.y, s * a.z}; }
    friend Vec3 operator*(const Vec3 &a, double s) { return s * a; }
    friend Vec3 operator/(const Vec3 &a, double s) { return {a.x / s, a.y / s, a.z / s}; }
    friend bool operator==(const Vec3 &, const Vec3 &) = default;
};

inline constexpr Vec3 kXAxis{1.0, 0.0, 0.0};
inline constexpr Vec3 kYAxis{0.0, 1.0, 0.0};
inline constexpr Vec3 kZAxis{0.0, 0.0, 1.0};

/// Normalized pure state of 1..3 qubits.
class Ket {
  public:
    /// Validates that |amps|^2 sums to one within `tol` and that the length is
    /// a power of two between 2 and 8.
    static Ket from_amplitudes(Amplitudes amps, double tol = kFlagTolerance);
    /// Rescales to unit norm. Rejects the zero vector.
    static Ket normalized(Amplitudes amps);
    /// Computational basis state; bit i of `index` follows the ordering above.
    static Ket basis(int n_qubits, int index);

    int n_qubits() const { return n_qubits_; }
    int dim() const { return static_cast<int>(amps_.size()); }
    const Amplitudes &amplitudes() const { return amps_; }
    Cplx operator[](int i) const { return amps_(i); }

    /// |this> (x) |other>, this on the more significant qubits.
    Ket tensor(const Ket &other) const;
    /// <this|other>
    Cplx inner(const Ket &other) const;
    /// |<this|other>|, equal to one iff the states agree up to global phase.
    double overlap(const Ket &other) const { return std::abs(inner(other)); }

  private:
    Ket(int n, Amplitudes amps) : n_qubits_(n), amps_(std::move(amps)) {}

    int n_qubits_;
    Amplitudes amps_;
};

/// Square operator on 1..3 qubits. Hermitian/unitary flags are checked
/// against the matrix when the operator is built.
class Op {
  public:
    static Op general(Matrix m);
    static Op hermitian(Matrix m);
    static Op unitary(Matrix m);
    static Op identity(int n_qubits);

    int dim() const { return static_cast<int>(m_.rows()); }
    int n_qubits() const;
    const Matrix &matrix() const { return m_; }
    bool is_hermitian() const { return hermitian_; }
    bool is_unitary() const { return unitary_; }

    Ket apply(const Ket &psi) const;
    /// Matrix action without renormalization, for non-unitary operators.
    Amplitudes act(const Amplitudes &amps) const;

  private:
    friend Op embed(const Op &op, std::span<const int> sites, int n_qubits);
    Op(Matrix m, bool hermitian, bool unitary);

    Matrix m_;
    bool hermitian_;
    bool unitary_;
};

/// Matrix product as a general (unflagged) operator.
Op operator*(const Op &lhs, const Op &rhs);

bool is_hermitian_matrix(const Matrix &m, double tol = kFlagTolerance);
bool is_unitary_matrix(const Matrix &m, double tol = kFlagTolerance);

/// a_x sigma_x + a_y sigma_y + a_z sigma_z.
Op pauli_op(const Vec3 &a);

/// AB - BA.
Op commutator(const Op &a, const Op &b);

/// Anticommutator AB + BA.
Op anticommutator(const Op &a, const Op &b);

struct SpinBasis {
    Ket plus;
    Ket minus;
};

/// Eigenvectors of sigma . n_p with eigenvalues +1 and -1. The first nonzero
/// amplitude of each is real and positive.
SpinBasis spin_eigenbasis(const Vec3 &n_p);

/// Projector |v><v| for a one-qubit ket.
Op projector(const Ket &v);

/// Lifts `op` to n_qubits, acting on `sites` (1-based; sites[0] is the most
/// significant qubit of op's index) and as identity elsewhere.
Op embed(const Op &op, std::span<const int> sites, int n_qubits);
Op embed(const Op &op, std::initializer_list<int> sites, int n_qubits);

/// <psi|X|psi> for hermitian X.
double expectation(const Ket &psi, const Op &x);

/// <psi| X_i Y_j |psi> for single-qubit observables on distinct sites.
double correlation(const Ket &psi, const Op &x, int site_i, const Op &y, int site_j);

}  // namespace mdrlab
