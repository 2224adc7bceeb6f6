#pragma once

#include <array>

#include "qdot/xstate.hpp"

namespace qdot::oracle {

/// Dense 4x4 real matrix, row-major. The brute-force engines below exist
/// only for cross-validation of the closed forms elsewhere in the library.
struct Dense4 {
    std::array<double, 16> a{};
    bool symmetric = false;

    double operator()(int i, int j) const noexcept { return a[4 * i + j]; }
    double& operator()(int i, int j) noexcept { return a[4 * i + j]; }
    double trace() const noexcept { return a[0] + a[5] + a[10] + a[15]; }

    static Dense4 from_xstate(const XState& s) noexcept;
    /// Requires a_ij == a_ji exactly; sets the symmetric flag.
    static Dense4 from_symmetric(const std::array<double, 16>& entries);
    /// sum_i weights[i] * |kets[i]><kets[i]| for real kets.
    static Dense4 mixture(const std::array<std::array<double, 4>, 4>& kets,
                          const std::array<double, 4>& weights) noexcept;
};

Dense4 multiply(const Dense4& lhs, const Dense4& rhs) noexcept;

/// Eigenvalues of a symmetric matrix by cyclic-by-rows Jacobi rotations,
/// nonincreasing. Stops when the off-diagonal Frobenius norm drops below
/// 1e-14; throws NoConvergence after 100 sweeps, DomainError if the
/// symmetric flag is missing.
std::array<double, 4> jacobi_eigenvalues(const Dense4& m);

/// Eigenvalues of rho * rho_tilde, rho_tilde = (sy x sy) rho (sy x sy),
/// for a real density matrix. The spin flip is a signed index permutation,
/// so no complex arithmetic is involved; the roots come from the
/// characteristic polynomial via a companion matrix and shifted QR
/// iteration (tolerance 1e-12, at most 500 steps -> NoConvergence).
/// Mathematically the eigenvalues are real and nonnegative: values in
/// [-1e-10, 0) are clamped to 0, anything lower throws NumericalFailure.
std::array<double, 4> product_eigenvalues(const Dense4& rho);

/// 2x2 Hermitian matrix; the off-diagonal a01 is stored as re01 + i*im01.
struct Herm2 {
    double a00 = 0, a11 = 0, re01 = 0, im01 = 0;

    double trace() const noexcept { return a00 + a11; }
    std::array<double, 2> eigenvalues() const noexcept;  // nonincreasing
};

Herm2 trace_out_a(const Dense4& rho) noexcept;
Herm2 trace_out_b(const Dense4& rho) noexcept;

/// Projective measurement of subsystem B along the Bloch direction
/// (theta, phi): outcome probabilities and the normalized conditional
/// states of subsystem A. Outcomes with probability below 1e-300 leave a
/// zero conditional.
struct BMeasurement {
    std::array<double, 2> prob{};
    std::array<Herm2, 2> conditional_a{};
};
BMeasurement measure_on_b(const Dense4& rho, double theta, double phi) noexcept;

}  // namespace qdot::oracle
