#include "mdrlab/sampling.hpp"

#include <cmath>
#include <numbers>

namespace mdrlab {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL)));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

Cplx Rng::complex_normal() {
    double re = normal();
    double im = normal();
    return {re, im};
}

Vec3 random_axis(Rng &rng) {
    double x = rng.normal();
    double y = rng.normal();
    double z = rng.normal();
    return {x, y, z};
}

Vec3 random_unit_vector(Rng &rng) {
    for (;;) {
        Vec3 v = random_axis(rng);
        if (v.norm() > 1e-8) {
            return v.normalized();
        }
    }
}

Ket random_ket(Rng &rng, int n_qubits) {
    Amplitudes amps(1 << n_qubits);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        amps(i) = rng.complex_normal();
    }
    return Ket::normalized(std::move(amps));
}

Op haar_unitary(Rng &rng, int n_qubits) {
    const int dim = 1 << n_qubits;
    Matrix g(dim, dim);
    for (int c = 0; c < dim; ++c) {
        for (int r = 0; r < dim; ++r) {
            g(r, c) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix &packed = qr.matrixQR();
    for (int c = 0; c < dim; ++c) {
        Cplx d = packed(c, c);
        double mag = std::abs(d);
        if (mag > 0.0) {
            q.col(c) *= d / mag;
        }
    }
    return Op::unitary(std::move(q));
}

}  // namespace mdrlab
