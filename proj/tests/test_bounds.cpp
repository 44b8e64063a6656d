#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "mdrlab/bounds.hpp"
#include "mdrlab/sampling.hpp"

using namespace mdrlab;
using testing::to_vec;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

oracle::Mat sigma(const Vec3 &v) { return oracle::sigma(v.x, v.y, v.z); }

// Random orthonormal pair.
std::pair<Vec3, Vec3> random_frame(Rng &rng) {
    Vec3 a = random_unit_vector(rng);
    Vec3 v = random_axis(rng);
    return {a, (v - v.dot(a) * a).normalized()};
}

}  // namespace

TEST_CASE("kappa values") {
    CHECK(kappa(MdrKind::Heisenberg) == 1.0);
    CHECK(kappa(MdrKind::Ozawa) == doctest::Approx(3.0 - 2.0 * kSqrt2).epsilon(1e-15));
    CHECK(std::string(to_string(BoundKind::Theorem1)) == "theorem1");
    CHECK(std::string(to_string(MdrKind::Ozawa)) == "ozawa");
    CHECK(bound_kind(MdrKind::Heisenberg) == BoundKind::Heisenberg);
}

TEST_CASE("Robertson-Schrodinger examples") {
    // |+> with sz, sx: covariance 0, <[sz,sx]> = 2i<sy> = 0; dA = 0.
    BoundReport r = rs_check(Ket::basis(1, 0), kZAxis, kXAxis);
    CHECK(r.lhs == doctest::Approx(0.0));
    CHECK(r.bound == doctest::Approx(0.0));
    // sy eigenstate with sz, sx: |<[sz,sx]>|^2/4 = 1 = dA^2 dB^2, saturated.
    Ket y_plus = spin_eigenbasis(kYAxis).plus;
    BoundReport s = rs_check(y_plus, kZAxis, kXAxis);
    CHECK(s.lhs == doctest::Approx(1.0));
    CHECK(s.bound == doctest::Approx(1.0));
    CHECK(s.margin == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(s.kind == BoundKind::RS);
    CHECK_THROWS_AS(rs_check(Ket::basis(2, 0), kZAxis, kXAxis), DimensionError);
}

TEST_CASE("Robertson-Schrodinger is saturated by every pure qubit state") {
    // For a pure qubit both sides equal (|a|^2 - (a.r)^2)(|b|^2 - (b.r)^2).
    Rng rng(51);
    double worst = 0.0;
    for (int k = 0; k < 2000; ++k) {
        Ket psi = random_ket(rng, 1);
        Vec3 a = random_axis(rng), b = random_axis(rng);
        BoundReport r = rs_check(psi, a, b);
        oracle::Vec v = to_vec(psi);
        double ra = oracle::expval(v, sigma(a)), rb = oracle::expval(v, sigma(b));
        double expected = (a.norm_sq() - ra * ra) * (b.norm_sq() - rb * rb);
        REQUIRE(r.bound == doctest::Approx(expected).epsilon(1e-10));
        REQUIRE(r.margin >= -1e-10);
        worst = std::max(worst, std::abs(r.margin));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("gram_area_sq examples") {
    CHECK(gram_area_sq(kXAxis, kYAxis) == 1.0);
    CHECK(gram_area_sq(kXAxis, 2.0 * kXAxis) == 0.0);
    CHECK(gram_area_sq({1, 2, 3}, {4, 5, 6}) == doctest::Approx(54.0));
    Rng rng(52);
    for (int k = 0; k < 100; ++k) {
        Vec3 a = random_axis(rng), b = random_axis(rng);
        REQUIRE(gram_area_sq(a, b) == doctest::Approx(a.cross(b).norm_sq()).epsilon(1e-12));
    }
}

TEST_CASE("bipartite correlation bound examples") {
    // Phi+ with a = z, b = x, n_p = y: E(z,y) = E(x,y) = 0, E(y,y) = -1. Saturated.
    Ket phi = testing::ket({1, 0, 0, 1});
    BoundReport r = theorem1_check(phi, kZAxis, kXAxis, kYAxis);
    CHECK(r.lhs == doctest::Approx(1.0));
    CHECK(r.bound == doctest::Approx(1.0));
    CHECK(r.kind == BoundKind::Theorem1);

    // n_p = z on Phi+: E(z,z) = 1 gives |b|^2 = 1.
    CHECK(theorem1_check(phi, kZAxis, kXAxis, kZAxis).lhs == doctest::Approx(1.0));

    // Product states never exceed the bound.
    Ket product = Ket::basis(2, 0);
    BoundReport p = theorem1_check(product, {1, 1, 0}, {0, 1, 1}, kZAxis);
    CHECK(p.margin >= -1e-12);

    CHECK_THROWS_AS(theorem1_check(Ket::basis(1, 0), kZAxis, kXAxis, kYAxis), DimensionError);
    CHECK_THROWS_AS(theorem1_check(phi, kZAxis, kXAxis, {0, 0.5, 0}), DomainError);
}

TEST_CASE("bipartite correlation bound holds for random states and axes") {
    Rng rng(53);
    for (int k = 0; k < 3000; ++k) {
        Ket psi = random_ket(rng, 2);
        Vec3 a = random_axis(rng), b = random_axis(rng), n = random_unit_vector(rng);
        BoundReport r = theorem1_check(psi, a, b, n);
        oracle::Vec v = to_vec(psi);
        double eap = oracle::correlation(v, sigma(a), 1, sigma(n), 2, 2);
        double ebp = oracle::correlation(v, sigma(b), 1, sigma(n), 2, 2);
        double ecp = oracle::correlation(v, sigma(a.cross(b)), 1, sigma(n), 2, 2);
        REQUIRE(r.lhs == doctest::Approx((eap * b - ebp * a).norm_sq() + ecp * ecp).epsilon(1e-10));
        REQUIRE(r.margin >= -1e-10 * std::max(1.0, r.bound));
    }
}

TEST_CASE("bipartite correlation bound is saturated by maximally entangled pairs") {
    Rng rng(54);
    for (int k = 0; k < 200; ++k) {
        Vec3 a = random_axis(rng), b = random_axis(rng);
        Ket pair = bell_state(BellPairSpec::make(k % 2, random_unit_vector(rng)));
        BoundReport r = theorem1_check(pair, a, b, random_unit_vector(rng));
        REQUIRE(std::abs(r.margin) < 1e-10);
    }
}

TEST_CASE("correlation bounds for the CNOT family") {
    CHECK(theorem2_bound(kZAxis, kXAxis, kYAxis, MdrKind::Heisenberg) == doctest::Approx(1.0));
    CHECK(theorem2_bound(kZAxis, kXAxis, kYAxis, MdrKind::Ozawa) == doctest::Approx(2 * kSqrt2 - 1).epsilon(1e-15));
    // n_p perpendicular to a x b leaves the trivial bound.
    CHECK(theorem2_bound(kZAxis, kXAxis, kXAxis, MdrKind::Heisenberg) == doctest::Approx(2.0));
    CHECK(theorem2_bound({2, 0, 0}, {0, 3, 0}, kZAxis, MdrKind::Heisenberg) == doctest::Approx(13.0 - 6.0));
    CHECK_THROWS_AS(theorem2_bound(kZAxis, kXAxis, {0, 2, 0}, MdrKind::Ozawa), DomainError);
}

TEST_CASE("correlation check at the CNOT peak") {
    Scenario s = cnot_scenario(kPi / 8, 0.0);
    MdrSample sample = evaluate_scenario(s);
    BoundReport h = theorem2_check(sample, s, MdrKind::Heisenberg);
    BoundReport o = theorem2_check(sample, s, MdrKind::Ozawa);
    CHECK(h.lhs == doctest::Approx(kSqrt2).epsilon(1e-14));
    CHECK(h.margin == doctest::Approx(1 - kSqrt2).epsilon(1e-12));
    CHECK(o.margin == doctest::Approx(kSqrt2 - 1).epsilon(1e-12));
    CHECK(h.kind == BoundKind::Heisenberg);
    CHECK(o.kind == BoundKind::Ozawa);

    // Tilting the projection axis relaxes both bounds.
    Scenario tilted = cnot_scenario(kPi / 8, kPi / 2);
    BoundReport t = theorem2_check(evaluate_scenario(tilted), tilted, MdrKind::Heisenberg);
    CHECK(t.bound == doctest::Approx(2.0));
    CHECK(t.margin > 0.0);
}

TEST_CASE("correlation check without interaction") {
    // No coupling: qubit 2 is maximally mixed so E(A2,A3) = 0, and the in-plane
    // symmetry gives (-1)^m E(B1,B2) = |b|^2.
    Rng rng(55);
    for (int k = 0; k < 50; ++k) {
        Vec3 a = random_axis(rng), b = random_axis(rng);
        Scenario s = Scenario::make(k % 2, a, b, random_unit_vector(rng), random_ket(rng, 1), Op::identity(2));
        MdrSample sample = evaluate_scenario(s);
        REQUIRE(std::abs(sample.E_A2A3) < 1e-12);
        REQUIRE(theorem2_check(sample, s, MdrKind::Ozawa).lhs == doctest::Approx(b.norm_sq()).epsilon(1e-12));
    }
}

TEST_CASE("correlation check rejects a sample from another scenario") {
    Scenario s = cnot_scenario(0.3, 0.0);
    MdrSample sample = evaluate_scenario(cnot_scenario(0.3, 0.1));
    CHECK_THROWS_AS(theorem2_check(sample, s, MdrKind::Ozawa), DomainError);
}

TEST_CASE("Ozawa-type correlation bound survives Haar interactions") {
    Rng rng(56);
    for (int k = 0; k < 2000; ++k) {
        Vec3 a = random_axis(rng), b = random_axis(rng);
        Scenario s = Scenario::make(rng.bit(), a, b, random_unit_vector(rng), random_ket(rng, 1), haar_unitary(rng, 2));
        BoundReport o = theorem2_check(evaluate_scenario(s), s, MdrKind::Ozawa);
        REQUIRE(o.margin >= -1e-9);
    }
}

TEST_CASE("mdr_lhs examples") {
    CHECK(mdr_lhs(1, 2, 3, 4, MdrKind::Heisenberg) == 2.0);
    CHECK(mdr_lhs(1, 2, 3, 4, MdrKind::Ozawa) == 2.0 + 4.0 + 6.0);
    CHECK(mdr_lhs(0, 0, 1, 1, MdrKind::Ozawa) == 0.0);
    CHECK_THROWS_AS(mdr_lhs(-1, 0, 0, 0, MdrKind::Ozawa), DomainError);
    CHECK_THROWS_AS(mdr_lhs(0, 0, 0, -0.1, MdrKind::Heisenberg), DomainError);
}

TEST_CASE("vertex radius closed forms") {
    for (double c : {0.1, 0.5, 1.0, 2.0}) {
        CHECK(vertex_min_radius(0.7, 1.3, c, MdrKind::Heisenberg) == doctest::Approx(2 * c).epsilon(1e-8));
        double sym = (2 - kSqrt2) * (2 - kSqrt2) * c;
        CHECK(vertex_min_radius(std::sqrt(c), std::sqrt(c), c, MdrKind::Ozawa) == doctest::Approx(sym).epsilon(1e-8));
    }
    CHECK(vertex_min_radius(1, 1, 0, MdrKind::Ozawa) == 0.0);
    // dB large: the minimum sits just inside the eta = 0 intercept eps = c/dB,
    // where eps = 0.1 - d, eta ~ 100 d gives 0.01 - 0.2 d + 1e4 d^2.
    CHECK(vertex_min_radius(0.0, 10.0, 1.0, MdrKind::Ozawa) == doctest::Approx(0.01 - 1e-6).epsilon(1e-6));
    CHECK_THROWS_AS(vertex_min_radius(-1, 0, 1, MdrKind::Ozawa), DomainError);
    CHECK_THROWS_AS(vertex_min_radius(0, 0, -1, MdrKind::Ozawa), DomainError);
    CHECK_THROWS_AS(vertex_min_radius(0, NAN, 1, MdrKind::Ozawa), DomainError);
}

TEST_CASE("vertex radius agrees with a brute-force grid") {
    Rng rng(57);
    for (int k = 0; k < 60; ++k) {
        double dA = 2 * rng.uniform(), dB = 2 * rng.uniform(), c = 2 * rng.uniform();
        if (k % 5 == 0) dA = 0.0;
        if (k % 7 == 0) dB = 0.0;
        double eps_max = 3 * std::sqrt(c) + 0.1;
        double o = vertex_min_radius(dA, dB, c, MdrKind::Ozawa);
        double og = oracle::vertex_radius_grid(dA, dB, c, 1.0, eps_max);
        REQUIRE(o == doctest::Approx(og).epsilon(1e-6));
        double h = vertex_min_radius(dA, dB, c, MdrKind::Heisenberg);
        REQUIRE(h == doctest::Approx(oracle::vertex_radius_grid(dA, dB, c, 0.0, eps_max)).epsilon(1e-8));
        REQUIRE(o <= h + 1e-12);
    }
}

TEST_CASE("CHSH composite at the CNOT peak") {
    Ket psi = post_interaction_state(cnot_scenario(kPi / 8, 0.0));
    ChshReport r = chsh_composite(psi, kZAxis, kXAxis);
    CHECK(r.total == doctest::Approx(2 + kSqrt2).epsilon(1e-12));
    CHECK(r.total > 2 * kSqrt2);
    CHECK(r.bound_h == doctest::Approx(2 * kSqrt2).epsilon(1e-14));
    CHECK(r.bound_o == doctest::Approx(2 * kSqrt2 * (2 * kSqrt2 - 1)).epsilon(1e-14));
    CHECK(r.total <= r.bound_o);
    CHECK(r.B12 + r.B23 == r.total);
}

TEST_CASE("CHSH composite reduces to axis correlations") {
    // With a' - b' = sqrt2 a and a' + b' = sqrt2 b each CHSH term equals
    // sqrt2 [E(A_i,A_j) + E(B_i,B_j)].
    Rng rng(58);
    for (int k = 0; k < 200; ++k) {
        auto [a, b] = random_frame(rng);
        Ket psi = random_ket(rng, 3);
        oracle::Vec v = to_vec(psi);
        auto pair = [&](int i, int j) {
            return kSqrt2 * (oracle::correlation(v, sigma(a), i, sigma(a), j, 3) +
                             oracle::correlation(v, sigma(b), i, sigma(b), j, 3));
        };
        ChshReport r = chsh_composite(psi, a, b);
        REQUIRE(r.B12 == doctest::Approx(pair(1, 2)).epsilon(1e-10));
        REQUIRE(r.B23 == doctest::Approx(pair(2, 3)).epsilon(1e-10));
    }
}

TEST_CASE("CHSH with half-length primed axes is the unit form over sqrt2") {
    // a' = (a+b)/2, b' = (b-a)/2 gives E(A,A') - E(A,B') + E(B,A') + E(B,B') =
    // E(A,A) + E(B,B) by linearity of the correlation in the second axis.
    Rng rng(60);
    for (int k = 0; k < 200; ++k) {
        auto [a, b] = random_frame(rng);
        Ket psi = random_ket(rng, 3);
        oracle::Vec v = to_vec(psi);
        Vec3 ap = (a + b) / 2.0, bp = (b - a) / 2.0;
        auto half = [&](int i, int j) {
            auto e = [&](const Vec3 &x, const Vec3 &y) { return oracle::correlation(v, sigma(x), i, sigma(y), j, 3); };
            return e(a, ap) - e(a, bp) + e(b, ap) + e(b, bp);
        };
        ChshReport r = chsh_composite(psi, a, b);
        REQUIRE(half(1, 2) * kSqrt2 == doctest::Approx(r.B12).epsilon(1e-10));
        REQUIRE(half(2, 3) * kSqrt2 == doctest::Approx(r.B23).epsilon(1e-10));
    }
}

TEST_CASE("CHSH composite of product states stays within 2 sqrt2") {
    Rng rng(59);
    for (int k = 0; k < 200; ++k) {
        auto [a, b] = random_frame(rng);
        Ket psi = random_ket(rng, 1).tensor(random_ket(rng, 1)).tensor(random_ket(rng, 1));
        REQUIRE(chsh_composite(psi, a, b).total <= 2 * kSqrt2 + 1e-12);
    }
}

TEST_CASE("CHSH composite validation") {
    Ket psi = Ket::basis(3, 0);
    CHECK_THROWS_AS(chsh_composite(Ket::basis(2, 0), kZAxis, kXAxis), DimensionError);
    CHECK_THROWS_AS(chsh_composite(psi, kZAxis, {1, 0, 0.1}), DomainError);
    CHECK_THROWS_AS(chsh_composite(psi, 2.0 * kZAxis, kXAxis), DomainError);
}

TEST_CASE("Heisenberg composite for the CNOT family") {
    Scenario ideal = cnot_scenario(0.0, 0.0);
    CHECK(heisenberg_composite(evaluate_scenario(ideal), ideal) == doctest::Approx(2.0).epsilon(1e-14));
    Scenario peak = cnot_scenario(kPi / 8, 0.0);
    double v = heisenberg_composite(evaluate_scenario(peak), peak);
    CHECK(v == doctest::Approx(1 + kSqrt2).epsilon(1e-12));
    CHECK(v > 2.0);
}
