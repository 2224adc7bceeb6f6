#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qdot/dot_model.hpp"
#include "qdot/oracle.hpp"
#include "qdot/xstate.hpp"
#include "support/samplers.hpp"

using namespace qdot;

TEST_CASE("validate accepts the Bell phi+ state") {
    const XState s = XState::validate(0.5, 0.0, 0.0, 0.5, 0.5, 0.0);
    CHECK(s.rho11() == doctest::Approx(0.5));
    CHECK(s.rho44() == doctest::Approx(0.5));
    CHECK(s.rho14() == doctest::Approx(0.5));
}

TEST_CASE("validate rejects a bad trace") {
    CHECK_THROWS_AS(XState::validate(0.4, 0.3, 0.2, 0.2, 0.0, 0.0), TraceError);
}

TEST_CASE("validate rejects an oversized coherence") {
    CHECK_THROWS_AS(XState::validate(0.5, 0.0, 0.0, 0.5, 0.6, 0.0), BlockNotPSD);
    CHECK_THROWS_AS(XState::validate(0.0, 0.5, 0.5, 0.0, 0.0, 0.51), BlockNotPSD);
}

TEST_CASE("validate rejects negative diagonals") {
    CHECK_THROWS_AS(XState::validate(-0.1, 0.5, 0.3, 0.3, 0.0, 0.0), NegativeDiagonal);
}

TEST_CASE("validate rejects non-finite input") {
    CHECK_THROWS_AS(XState::validate(std::nan(""), 0.5, 0.3, 0.2, 0.0, 0.0), DomainError);
}

TEST_CASE("validate clamps boundary dust") {
    const XState s = XState::validate(-1e-13, 0.5, 0.5, 1e-13, 0.0, 0.5 + 1e-13);
    CHECK(s.rho11() == 0.0);
    CHECK(std::abs(s.rho23()) <= std::sqrt(s.rho22() * s.rho33()));
    const double tr = s.rho11() + s.rho22() + s.rho33() + s.rho44();
    CHECK(tr == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("binary entropy reference points") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.11) == doctest::Approx(0.499915958164528).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(1.5), DomainError);
    CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);
}

TEST_CASE("binary entropy is symmetric") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = uni(rng);
        CHECK(std::abs(binary_entropy(x) - binary_entropy(1.0 - x)) <= 1e-15);
    }
}

TEST_CASE("closed-form eigenvalues on reference states") {
    const auto mixed = eigenvalues(XState::validate(0.25, 0.25, 0.25, 0.25, 0.0, 0.0));
    for (double e : mixed.eta) CHECK(e == doctest::Approx(0.25));

    const auto bell = eigenvalues(XState::validate(0.5, 0.0, 0.0, 0.5, 0.5, 0.0));
    CHECK(bell.eta[0] == doctest::Approx(1.0));
    CHECK(bell.eta[1] == doctest::Approx(0.0).epsilon(0).scale(1));

    const auto s = eigenvalues(XState::validate(0.4, 0.3, 0.2, 0.1, 0.1, 0.0));
    CHECK(s.eta[0] == doctest::Approx(0.4302775637731995).epsilon(1e-12));
    CHECK(s.eta[1] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(s.eta[2] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(s.eta[3] == doctest::Approx(0.0697224362268005).epsilon(1e-10));
}

TEST_CASE("closed-form eigenvalues match the dense Jacobi solver") {
    std::mt19937 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const XState s = testing::random_xstate(rng);
        const auto closed = eigenvalues(s).eta;
        const auto dense = oracle::jacobi_eigenvalues(oracle::Dense4::from_xstate(s));
        for (int k = 0; k < 4; ++k) CHECK(std::abs(closed[k] - dense[k]) < 1e-10);
    }
}

TEST_CASE("von Neumann entropy endpoints") {
    CHECK(von_neumann_entropy(XState::validate(0.5, 0.0, 0.0, 0.5, 0.5, 0.0)) ==
          doctest::Approx(0.0).epsilon(0).scale(1));
    CHECK(von_neumann_entropy(XState::validate(0.25, 0.25, 0.25, 0.25, 0.0, 0.0)) ==
          doctest::Approx(2.0));
}

TEST_CASE("thermal-state entropy equals the dense-spectrum entropy") {
    const XState s = thermal_state(DotParams(10.0, 1.0, 1.0, 1.0));
    const auto dense = oracle::jacobi_eigenvalues(oracle::Dense4::from_xstate(s));
    CHECK(std::abs(von_neumann_entropy(s) - shannon_entropy(dense)) < 1e-10);
}

TEST_CASE("entropy vanishes exactly on pure states and only there") {
    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        const XState pure = testing::random_pure_xstate(rng);
        CHECK(von_neumann_entropy(pure) <= 1e-10);
        CHECK(eigenvalues(pure).eta[0] >= 1.0 - 1e-10);
    }
    for (int i = 0; i < 1000; ++i) {
        const XState s = testing::random_xstate(rng);
        if (eigenvalues(s).eta[0] < 1.0 - 1e-6) CHECK(von_neumann_entropy(s) > 1e-10);
    }
}

TEST_CASE("marginal entropies") {
    const auto bell = marginal_entropies(XState::validate(0.5, 0.0, 0.0, 0.5, 0.5, 0.0));
    CHECK(bell.subsystem_a == doctest::Approx(1.0));
    CHECK(bell.subsystem_b == doctest::Approx(1.0));

    const auto up = marginal_entropies(XState::validate(1.0, 0.0, 0.0, 0.0, 0.0, 0.0));
    CHECK(up.subsystem_a == 0.0);
    CHECK(up.subsystem_b == 0.0);

    // the thermal state is swap symmetric, so both marginals equal H(u+w)
    const DotParams p(10.0, 1.0, 1.0, 1.0);
    const auto el = thermal_elements(p);
    const auto m = marginal_entropies(thermal_state(p));
    const double expected = binary_entropy((el.u + el.w) / el.z);
    CHECK(m.subsystem_a == doctest::Approx(expected).epsilon(1e-12));
    CHECK(m.subsystem_b == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("validation accepts every thermal state on a dense parameter grid") {
    constexpr int kN = 50;
    for (int it = 0; it < kN; ++it)
        for (int ik = 0; ik < kN; ++ik)
            for (int ib = 0; ib < kN; ++ib) {
                const double t = 0.01 + it * (20.0 - 0.01) / (kN - 1);
                const double k0 = ik * 20.0 / (kN - 1);
                const double b0 = ib * 5.0 / (kN - 1);
                CHECK_NOTHROW(thermal_state(DotParams(k0, 1.0, b0, t)));
            }
}
