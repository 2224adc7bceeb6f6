#include "qdot/dot_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qdot {

namespace {
// Below this temperature the Gibbs exponentials are meaningless in double
// precision; thermal_state switches to the ground-space projector.
constexpr double kMinTemperature = 1e-8;
// Energies within this distance of the minimum count as ground states.
constexpr double kDegeneracyTol = 1e-12;
}  // namespace

DotParams::DotParams(double k0, double gamma, double b0, double temperature)
    : k0_(k0), gamma_(gamma), b0_(b0), temperature_(temperature) {
    for (double v : {k0, gamma, b0, temperature})
        if (!std::isfinite(v)) throw DomainError("dot parameter is not finite");
    if (temperature < 0.0)
        throw DomainError("temperature must be nonnegative, got " + std::to_string(temperature));
}

double Eigensystem::ground_energy() const noexcept {
    double e = levels[0].energy;
    for (const auto& l : levels) e = std::min(e, l.energy);
    return e;
}

Eigensystem eigensystem(const DotParams& p) noexcept {
    const double base = p.k0() / 16.0;
    const double h = p.field();
    return {{{
        {DotLevel::DownDown, base + h, false},
        {DotLevel::UpUp, base - h, false},
        {DotLevel::TripletZero, base, true},
        {DotLevel::Singlet, -3.0 * p.k0() / 16.0, true},
    }}};
}

GroundRegime ground_regime(const DotParams& p) noexcept {
    const double h = p.field();
    const double gap = p.k0() / 4.0;
    if (std::abs(std::abs(h) - gap) <= kDegeneracyTol) return GroundRegime::DegenerateBoundary;
    if (std::abs(h) < gap) return GroundRegime::Singlet;
    if (h > 0.0) return GroundRegime::ProductUp;
    if (h < 0.0) return GroundRegime::ProductDown;
    // h == 0 with k0 < 0: the whole triplet manifold is the ground space
    return GroundRegime::DegenerateBoundary;
}

ThermalElements thermal_elements(const DotParams& p) {
    const double t = p.temperature();
    if (t < kMinTemperature)
        throw TemperatureTooSmall("temperature " + std::to_string(t) +
                                  " is below 1e-8; use the T = 0 path of thermal_state");

    const Eigensystem es = eigensystem(p);
    const double e_min = es.ground_energy();
    auto weight = [&](double e) { return std::exp(-(e - e_min) / t); };

    ThermalElements el;
    el.v = weight(es.levels[0].energy);  // |downdown>
    el.u = weight(es.levels[1].energy);  // |upup>
    const double triplet = weight(es.levels[2].energy);
    const double singlet = weight(es.levels[3].energy);
    el.w = 0.5 * (triplet + singlet);
    el.y = 0.5 * (triplet - singlet);
    el.z = el.u + el.v + 2.0 * el.w;
    el.log_scale = -e_min / t;
    return el;
}

namespace {

// Gibbs weights in the T -> 0 limit: indicator of the ground space.
ThermalElements ground_space_elements(const DotParams& p) {
    const Eigensystem es = eigensystem(p);
    const double e_min = es.ground_energy();
    auto weight = [&](double e) { return (e - e_min <= kDegeneracyTol) ? 1.0 : 0.0; };

    ThermalElements el;
    el.v = weight(es.levels[0].energy);
    el.u = weight(es.levels[1].energy);
    const double triplet = weight(es.levels[2].energy);
    const double singlet = weight(es.levels[3].energy);
    el.w = 0.5 * (triplet + singlet);
    el.y = 0.5 * (triplet - singlet);
    el.z = el.u + el.v + 2.0 * el.w;
    return el;
}

ThermalElements elements_or_ground(const DotParams& p) {
    return p.temperature() < kMinTemperature ? ground_space_elements(p) : thermal_elements(p);
}

}  // namespace

XState thermal_state(const DotParams& p) {
    const ThermalElements el = elements_or_ground(p);
    return XState::validate(el.u / el.z, el.w / el.z, el.w / el.z, el.v / el.z,
                            0.0, el.y / el.z);
}

double dot_concurrence(const DotParams& p) {
    const ThermalElements el = elements_or_ground(p);
    return (2.0 / el.z) * std::max(0.0, std::abs(el.y) - std::sqrt(el.u * el.v));
}

double dot_discord(const DotParams& p) {
    const ThermalElements el = elements_or_ground(p);
    const double u = el.u / el.z;
    const double w = el.w / el.z;
    const double y = el.y / el.z;
    const double v = el.v / el.z;

    // spectrum of the thermal state is {u, v, w + y, w - y}
    const double s_rho = -(xlog2x(u) + xlog2x(v) + xlog2x(w + y) + xlog2x(w - y));
    const double h_uw = binary_entropy(u + w);
    const double d1 =
        binary_entropy(0.5 * (1.0 + std::sqrt(std::pow(1.0 - 2.0 * (w + v), 2) + 4.0 * y * y)));
    const double d2 = -xlog2x(u) - 2.0 * xlog2x(w) - xlog2x(v) + h_uw;

    const double q1 = h_uw - s_rho + d1;
    const double q2 = h_uw - s_rho + d2;
    double qd = std::min(q1, q2);
    if (qd < 0.0 && qd >= -1e-9) qd = 0.0;
    return qd;
}

}  // namespace qdot
