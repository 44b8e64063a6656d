#pragma once

// Seeded random sampling of states, axes and interaction unitaries.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The real/normal transforms are written out here because the
// std:: distributions are implementation-defined, and campaign outputs must be
// identical across standard libraries.

#include <cstdint>
#include <random>

#include "mdrlab/qcore.hpp"

namespace mdrlab {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for trial `index` of a campaign seeded with `seed`.
    static Rng for_trial(std::uint64_t seed, std::uint64_t index);

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal (Box-Muller, both variates used).
    double normal();
    Cplx complex_normal();
    int bit() { return static_cast<int>(engine_() >> 63); }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Normalized real Gaussian triple.
Vec3 random_unit_vector(Rng &rng);
/// Real Gaussian triple, not normalized.
Vec3 random_axis(Rng &rng);
/// Pure state from normalized complex Gaussian amplitudes.
Ket random_ket(Rng &rng, int n_qubits);
/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal moved into Q.
Op haar_unitary(Rng &rng, int n_qubits);

}  // namespace mdrlab
