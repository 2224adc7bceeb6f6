#pragma once

#include <array>
#include <cmath>

#include "qdot/xstate.hpp"

namespace qdot {

/// Parameters of the reduced two-spin model of an isolated two-electron
/// quantum dot, H = (k0/4) S1.S2 - gamma*B0*Sz, in natural units
/// (hbar = k_B = 1). k0 is the singlet-triplet splitting parameter, gamma
/// the gyromagnetic ratio, B0 the magnetic field. Temperature must be
/// nonnegative; all fields must be finite.
class DotParams {
public:
    DotParams(double k0, double gamma, double b0, double temperature);

    double k0() const noexcept { return k0_; }
    double gamma() const noexcept { return gamma_; }
    double b0() const noexcept { return b0_; }
    double temperature() const noexcept { return temperature_; }
    /// Effective Zeeman energy gamma*B0.
    double field() const noexcept { return gamma_ * b0_; }

private:
    double k0_, gamma_, b0_, temperature_;
};

/// The four energy eigenstates in |psi_1>..|psi_4> order: |downdown>,
/// |upup>, the triplet-0 Bell state and the singlet Bell state.
enum class DotLevel { DownDown, UpUp, TripletZero, Singlet };

struct EnergyLevel {
    DotLevel state;
    double energy;
    bool maximally_entangled;  // true for the two Bell levels
};

/// E1 = k0/16 + gamma*B0, E2 = k0/16 - gamma*B0, E3 = k0/16, E4 = -3*k0/16.
struct Eigensystem {
    std::array<EnergyLevel, 4> levels;

    double ground_energy() const noexcept;
};

Eigensystem eigensystem(const DotParams& params) noexcept;

/// Which state spans the zero-temperature ground space: the singlet for
/// gamma|B0| < k0/4, a spin-polarized product state beyond, and
/// DegenerateBoundary within 1e-12 of the crossing (or whenever the ground
/// space is otherwise degenerate, e.g. k0 = B0 = 0).
enum class GroundRegime { Singlet, ProductUp, ProductDown, DegenerateBoundary };

GroundRegime ground_regime(const DotParams& params) noexcept;

/// Unnormalized Gibbs weights of the thermal state and the partition
/// function z = u + v + 2w. The stored weights use energies measured from
/// the ground state, so the exponentials never overflow at small
/// temperature; raw_*() rescale to the absolute-energy convention
/// (u = exp(-(k0-16 gamma B0)/(16T)) and so on), finite wherever that
/// convention itself is.
struct ThermalElements {
    double u = 0, w = 0, y = 0, v = 0;
    double z = 0;
    double log_scale = 0;  // raw weight = stored weight * exp(log_scale)

    double raw_u() const noexcept { return u * std::exp(log_scale); }
    double raw_w() const noexcept { return w * std::exp(log_scale); }
    double raw_y() const noexcept { return y * std::exp(log_scale); }
    double raw_v() const noexcept { return v * std::exp(log_scale); }
    double raw_z() const noexcept { return raw_u() + raw_v() + 2.0 * raw_w(); }
};

/// Throws TemperatureTooSmall for temperature < 1e-8; callers should use
/// thermal_state, which routes such inputs through the T = 0 ground-space
/// projector instead.
ThermalElements thermal_elements(const DotParams& params);

/// The Gibbs state as an X-state: diag (u, w, w, v)/z with rho23 = y/z.
/// At T = 0 (and below the 1e-8 cutoff) this is the normalized projector
/// onto the degenerate ground space.
XState thermal_state(const DotParams& params);

/// Closed form C = (2/z) max{0, |y| - sqrt(u v)}; agrees with
/// concurrence(thermal_state(params)) to machine precision.
double dot_concurrence(const DotParams& params);

/// Closed form min(Q1, Q2) with Q_j = H(u+w) - S(rho_T) + D_j,
/// D1 = H((1 + sqrt((1-2(w+v))^2 + 4y^2))/2),
/// D2 = -u log2 u - 2w log2 w - v log2 v + H(u+w),
/// all arguments normalized by z. Agrees with
/// quantum_discord(thermal_state(params)) to machine precision.
double dot_discord(const DotParams& params);

}  // namespace qdot
