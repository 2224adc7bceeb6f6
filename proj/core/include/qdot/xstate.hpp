#pragma once

#include <array>
#include <span>

#include "qdot/errors.hpp"

namespace qdot {

// Values within this distance of a physical boundary (trace 1, zero
// probability, PSD block edge) are accepted and clamped onto it.
inline constexpr double kValidationSlack = 1e-12;

/// x * log2(x) with the convention 0*log2(0) = 0. Nonpositive x maps to 0,
/// which also absorbs rounding dust on clamped probabilities.
double xlog2x(double x) noexcept;

/// Shannon entropy of a probability vector in bits, -sum p log2 p.
double shannon_entropy(std::span<const double> probs) noexcept;

/// Binary entropy H(x) in bits. The argument may stray past [0,1] by at most
/// kValidationSlack; anything further throws DomainError.
double binary_entropy(double x);

/// Two-qubit density matrix whose only nonzero entries are the diagonal and
/// the anti-diagonal in the computational basis {|00>,|01>,|10>,|11>}, with
/// |0> = spin up. Coherences are restricted to real values, so rho41 = rho14
/// and rho32 = rho23. Instances come out of validate() and never change.
class XState {
public:
    /// Checks unit trace, nonnegative diagonal, and positive semidefiniteness
    /// of the two 2x2 blocks (|rho14| <= sqrt(rho11*rho44) and likewise for
    /// rho23). Boundary violations within kValidationSlack are clamped; the
    /// trace is renormalized. Throws TraceError, NegativeDiagonal or
    /// BlockNotPSD, naming the offending value.
    static XState validate(double rho11, double rho22, double rho33,
                           double rho44, double rho14, double rho23);

    double rho11() const noexcept { return rho11_; }
    double rho22() const noexcept { return rho22_; }
    double rho33() const noexcept { return rho33_; }
    double rho44() const noexcept { return rho44_; }
    double rho14() const noexcept { return rho14_; }
    double rho23() const noexcept { return rho23_; }

private:
    XState(double r11, double r22, double r33, double r44, double r14, double r23) noexcept
        : rho11_(r11), rho22_(r22), rho33_(r33), rho44_(r44), rho14_(r14), rho23_(r23) {}

    double rho11_, rho22_, rho33_, rho44_, rho14_, rho23_;
};

/// Eigenvalues of an X-state, nonincreasing; they sum to 1.
struct Spectrum4 {
    std::array<double, 4> eta{};
};

/// Closed-form spectrum from the two 2x2 blocks:
/// (rho11+rho44)/2 +- sqrt(((rho11-rho44)/2)^2 + rho14^2) and the analogue
/// for the inner block. Results are clamped onto [0,1] when within
/// kValidationSlack of the edge.
Spectrum4 eigenvalues(const XState& state);

/// Von Neumann entropy S(rho) in bits, in [0, 2].
double von_neumann_entropy(const XState& state);

struct MarginalEntropies {
    double subsystem_a = 0;  // H(rho11 + rho22)
    double subsystem_b = 0;  // H(rho11 + rho33)
};
MarginalEntropies marginal_entropies(const XState& state);

}  // namespace qdot
