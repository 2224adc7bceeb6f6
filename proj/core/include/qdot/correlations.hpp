#pragma once

#include "qdot/oracle.hpp"
#include "qdot/xstate.hpp"

namespace qdot {

enum class DiscordBranch { Q1, Q2 };

struct CorrelationReport {
    double concurrence = 0;
    double discord = 0;
    double mutual_information = 0;
    DiscordBranch discord_branch = DiscordBranch::Q1;
};

/// C = 2 * max{0, |rho23| - sqrt(rho11*rho44), |rho14| - sqrt(rho22*rho33)}.
double concurrence(const XState& state);

/// General Wootters concurrence, max{0, l1-l2-l3-l4} with l_i the square
/// roots of the eigenvalues of rho * rho_tilde in decreasing order. Fully
/// independent of the X-structure closed form above; used to cross-check it.
double wootters_concurrence_oracle(const oracle::Dense4& rho);

struct DiscordResult {
    double bits = 0;
    DiscordBranch branch = DiscordBranch::Q1;
};

/// Two-branch closed-form quantum discord for X-states, min(Q1, Q2) with
/// Q_j = H(rho11+rho33) + sum_i eta_i log2 eta_i + D_j,
/// D_1 = H((1+tau)/2), tau = sqrt([1-2(rho33+rho44)]^2 + 4(|rho14|+|rho23|)^2),
/// D_2 = -sum_i rho_ii log2 rho_ii + H(rho11+rho33).
/// Implemented exactly in this form; discord_numeric_oracle documents where
/// it deviates from full minimization. Results in [-1e-9, 0) clamp to 0.
DiscordResult quantum_discord(const XState& state);

/// Discord by explicit minimization over projective measurements on
/// subsystem B: a (theta, phi) grid at the given resolution (>= 90),
/// followed by 20 rounds of shrinking-step coordinate descent from the best
/// grid point. Every entropy on this path runs through the dense solvers,
/// so the estimate is independent of the closed forms. Deterministic for a
/// fixed resolution (ties keep the lexicographically lowest angles).
double discord_numeric_oracle(const XState& state, int grid_resolution);

/// I(A;B) = H(rho11+rho22) + H(rho11+rho33) - S(rho) in bits.
double mutual_information(const XState& state);

CorrelationReport correlation_report(const XState& state);

}  // namespace qdot
