#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qdot/oracle.hpp"
#include "qdot/xstate.hpp"
#include "support/samplers.hpp"

using namespace qdot;
using oracle::Dense4;

TEST_CASE("jacobi on diagonal and pure matrices") {
    Dense4 mixed;
    mixed.symmetric = true;
    for (int i = 0; i < 4; ++i) mixed(i, i) = 0.25;
    for (double e : oracle::jacobi_eigenvalues(mixed)) CHECK(e == 0.25);

    Dense4 diag;
    diag.symmetric = true;
    diag(0, 0) = 0.2;
    diag(1, 1) = 0.4;
    diag(2, 2) = 0.1;
    diag(3, 3) = 0.3;
    const auto e = oracle::jacobi_eigenvalues(diag);
    CHECK(e[0] == 0.4);
    CHECK(e[1] == 0.3);
    CHECK(e[2] == 0.2);
    CHECK(e[3] == 0.1);

    const auto bell =
        Dense4::from_xstate(XState::validate(0.5, 0.0, 0.0, 0.5, 0.5, 0.0));
    const auto be = oracle::jacobi_eigenvalues(bell);
    CHECK(be[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(be[1]) < 1e-14);
    CHECK(std::abs(be[3]) < 1e-14);
}

TEST_CASE("jacobi requires the symmetric flag") {
    Dense4 m;
    CHECK_THROWS_AS(oracle::jacobi_eigenvalues(m), DomainError);
}

TEST_CASE("from_symmetric verifies exact symmetry") {
    std::array<double, 16> bad{};
    bad[1] = 0.5;
    CHECK_THROWS_AS(Dense4::from_symmetric(bad), DomainError);
}

TEST_CASE("product eigenvalues on reference states") {
    const auto bell =
        Dense4::from_xstate(XState::validate(0.5, 0.0, 0.0, 0.5, 0.5, 0.0));
    const auto be = oracle::product_eigenvalues(bell);
    CHECK(be[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(be[1]) < 1e-10);

    const auto mixed =
        Dense4::from_xstate(XState::validate(0.25, 0.25, 0.25, 0.25, 0.0, 0.0));
    for (double e : oracle::product_eigenvalues(mixed))
        CHECK(e == doctest::Approx(1.0 / 16.0).epsilon(1e-10));

    // pure product states have a nilpotent product: every eigenvalue ~ 0
    const auto up = Dense4::from_xstate(XState::validate(1.0, 0.0, 0.0, 0.0, 0.0, 0.0));
    for (double e : oracle::product_eigenvalues(up)) CHECK(e <= 1e-10);
}

TEST_CASE("jacobi matches the closed-form X spectrum on random states") {
    std::mt19937 rng(21);
    for (int i = 0; i < 1000; ++i) {
        const XState s = testing::random_xstate(rng);
        const auto dense = oracle::jacobi_eigenvalues(Dense4::from_xstate(s));
        const auto closed = eigenvalues(s).eta;
        for (int k = 0; k < 4; ++k) CHECK(std::abs(dense[k] - closed[k]) < 1e-10);
    }
}

TEST_CASE("product eigenvalues are invariant under a qubit swap") {
    std::mt19937 rng(23);
    for (int i = 0; i < 500; ++i) {
        const auto rho = Dense4::from_xstate(testing::random_xstate(rng));
        const auto ev = oracle::product_eigenvalues(rho);
        const auto sv = oracle::product_eigenvalues(testing::swap_qubits(rho));
        for (int k = 0; k < 4; ++k) CHECK(std::abs(ev[k] - sv[k]) < 1e-10);
    }
}

TEST_CASE("mixture assembles a symmetric density matrix") {
    const std::array<std::array<double, 4>, 4> kets{{
        {0.0, 0.0, 0.0, 1.0},
        {1.0, 0.0, 0.0, 0.0},
        {0.0, std::sqrt(0.5), std::sqrt(0.5), 0.0},
        {0.0, std::sqrt(0.5), -std::sqrt(0.5), 0.0},
    }};
    const auto m = Dense4::mixture(kets, {0.25, 0.25, 0.25, 0.25});
    CHECK(m.symmetric);
    CHECK(m.trace() == doctest::Approx(1.0).epsilon(1e-15));
    for (int i = 0; i < 4; ++i) CHECK(m(i, i) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(std::abs(m(1, 2)) < 1e-15);
}

TEST_CASE("Herm2 eigenvalues and partial traces") {
    const oracle::Herm2 h{0.7, 0.3, 0.1, 0.2};
    const auto e = h.eigenvalues();
    CHECK(e[0] + e[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(e[0] - e[1] ==
          doctest::Approx(std::sqrt(0.16 + 4 * (0.01 + 0.04))).epsilon(1e-12));

    const auto rho =
        Dense4::from_xstate(XState::validate(0.4, 0.3, 0.2, 0.1, 0.1, -0.2));
    const auto ra = oracle::trace_out_a(rho);
    CHECK(ra.a00 == doctest::Approx(0.6));
    CHECK(ra.a11 == doctest::Approx(0.4));
    CHECK(ra.re01 == 0.0);
    const auto rb = oracle::trace_out_b(rho);
    CHECK(rb.a00 == doctest::Approx(0.7));
    CHECK(rb.a11 == doctest::Approx(0.3));
}

TEST_CASE("measure_on_b probabilities sum to one and conditionals are states") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> ang(0.0, 3.14159);
    for (int i = 0; i < 200; ++i) {
        const auto rho = Dense4::from_xstate(testing::random_xstate(rng));
        const auto m = oracle::measure_on_b(rho, ang(rng), ang(rng));
        CHECK(m.prob[0] + m.prob[1] == doctest::Approx(1.0).epsilon(1e-12));
        for (int o = 0; o < 2; ++o) {
            if (m.prob[o] <= 0.0) continue;
            const auto ev = m.conditional_a[o].eigenvalues();
            CHECK(ev[0] + ev[1] == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(ev[1] > -1e-12);
        }
    }
}

TEST_CASE("measuring along z reproduces the computational-basis conditionals") {
    const XState s = XState::validate(0.4, 0.3, 0.2, 0.1, 0.1, -0.2);
    const auto m = oracle::measure_on_b(Dense4::from_xstate(s), 0.0, 0.0);
    CHECK(m.prob[0] == doctest::Approx(s.rho11() + s.rho33()).epsilon(1e-14));
    CHECK(m.prob[1] == doctest::Approx(s.rho22() + s.rho44()).epsilon(1e-14));
    CHECK(m.conditional_a[0].a00 == doctest::Approx(s.rho11() / m.prob[0]));
    CHECK(m.conditional_a[0].re01 == doctest::Approx(0.0).epsilon(0).scale(1));
}
