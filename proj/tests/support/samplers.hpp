#pragma once

#include <array>
#include <cmath>
#include <random>

#include "qdot/oracle.hpp"
#include "qdot/xstate.hpp"

namespace qdot::testing {

// Diagonal from a flat Dirichlet, coherences uniform inside the PSD bounds;
// physical by construction.
inline XState random_xstate(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::array<double, 4> d{};
    double sum = 0.0;
    for (auto& x : d) {
        x = -std::log(1.0 - uni(rng));
        sum += x;
    }
    for (auto& x : d) x /= sum;
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    const double r14 = sym(rng) * std::sqrt(d[0] * d[3]);
    const double r23 = sym(rng) * std::sqrt(d[1] * d[2]);
    return XState::validate(d[0], d[1], d[2], d[3], r14, r23);
}

// Pure X-states: a two-amplitude superposition inside one anti-diagonal block.
inline XState random_pure_xstate(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double p = uni(rng);
    const double amp = std::sqrt(p * (1.0 - p));
    const double coh = uni(rng) < 0.5 ? amp : -amp;
    if (uni(rng) < 0.5) return XState::validate(p, 0.0, 0.0, 1.0 - p, coh, 0.0);
    return XState::validate(0.0, p, 1.0 - p, 0.0, 0.0, coh);
}

// Product states diag(p, 1-p) (x) diag(q, 1-q); the only X-shaped products.
inline XState random_product_state(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double p = uni(rng), q = uni(rng);
    return XState::validate(p * q, p * (1.0 - q), (1.0 - p) * q, (1.0 - p) * (1.0 - q),
                            0.0, 0.0);
}

// rho -> S rho S with S the qubit-swap permutation (basis rows 1 and 2 trade).
inline oracle::Dense4 swap_qubits(const oracle::Dense4& rho) {
    static constexpr int kPerm[4] = {0, 2, 1, 3};
    oracle::Dense4 out;
    out.symmetric = rho.symmetric;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = rho(kPerm[i], kPerm[j]);
    return out;
}

}  // namespace qdot::testing
