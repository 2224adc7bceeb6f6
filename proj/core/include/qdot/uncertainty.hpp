#pragma once

#include <array>
#include <complex>

#include "qdot/oracle.hpp"
#include "qdot/xstate.hpp"

namespace qdot {

/// Observable measured on subsystem A; B is kept as the quantum memory.
/// The bounds below fix the pair Q = sigma_x, R = sigma_z, for which the
/// complementarity c is exactly 1/2 and log2(1/c) = 1.
enum class Observable { SigmaX, SigmaZ };

/// Joint state after a projective measurement of one observable on A:
/// rho^{XB} = sum_x (Pi_x (x) I) rho (Pi_x (x) I), the outcome probabilities
/// and the normalized conditional memory states rho_x^B.
struct MeasuredState {
    oracle::Dense4 joint;
    std::array<double, 2> prob{};
    std::array<oracle::Herm2, 2> memory{};
};

struct UncertaintyReport {
    double lhs = 0;                   // S(Q|B) + S(R|B)
    double berta_bound = 0;           // log2(1/c) + S(A|B)
    double adabi_bound = 0;           // berta_bound + max{0, delta}
    double delta = 0;                 // I(A;B) - I(Q;B) - I(R;B), kept signed
    double holevo_x = 0;              // I(X;B)
    double holevo_z = 0;              // I(Z;B)
    double conditional_entropy = 0;   // S(A|B)
    double complementarity_term = 0;  // log2(1/c) = 1 for the fixed pair
};

using Ket2 = std::array<std::complex<double>, 2>;
using QubitBasis = std::array<Ket2, 2>;

/// c = max_{i,j} |<q_i|r_j>|^2. Both bases must be orthonormal within 1e-12,
/// otherwise BasisNotOrthonormal.
double complementarity(const QubitBasis& q, const QubitBasis& r);

MeasuredState post_measurement(const XState& state, Observable observable);

/// S(A|B) = S(rho_AB) - S(rho_B) in bits, in [-1, 1].
double conditional_entropy(const XState& state);

/// Closed-form Holevo quantities for the two fixed observables.
double holevo_z(const XState& state);
double holevo_x(const XState& state);

/// Generic Holevo construction S(rho_B) - sum_x p_x S(rho_x^B) assembled
/// from a post-measurement decomposition; the closed forms above are
/// cross-checked against this route.
double holevo_from_measurement(const MeasuredState& measured);

double berta_bound(const XState& state);
double adabi_bound(const XState& state);

/// S(Q|B) + S(R|B) with every entropy taken from the dense 4x4 Jacobi
/// solver and the 2x2 solver, independent of the closed forms.
double uncertainty_lhs(const XState& state);

UncertaintyReport uncertainty_report(const XState& state);

}  // namespace qdot
