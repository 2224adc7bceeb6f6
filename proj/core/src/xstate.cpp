#include "qdot/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace qdot {

double xlog2x(double x) noexcept {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

double shannon_entropy(std::span<const double> probs) noexcept {
    double s = 0.0;
    for (double p : probs) s -= xlog2x(p);
    return s;
}

double binary_entropy(double x) {
    if (x < -kValidationSlack || x > 1.0 + kValidationSlack)
        throw DomainError("binary_entropy: argument outside [0,1]: " + std::to_string(x));
    x = std::clamp(x, 0.0, 1.0);
    return -xlog2x(x) - xlog2x(1.0 - x);
}

XState XState::validate(double rho11, double rho22, double rho33,
                        double rho44, double rho14, double rho23) {
    double d[4] = {rho11, rho22, rho33, rho44};
    for (double v : {rho11, rho22, rho33, rho44, rho14, rho23})
        if (!std::isfinite(v))
            throw DomainError("x-state element is not finite");

    for (double& x : d) {
        if (x < -kValidationSlack)
            throw NegativeDiagonal("diagonal element is negative: " + std::to_string(x));
        if (x < 0.0) x = 0.0;
    }

    const double tr = d[0] + d[1] + d[2] + d[3];
    if (std::abs(tr - 1.0) > kValidationSlack)
        throw TraceError("trace is " + std::to_string(tr) + ", expected 1");
    for (double& x : d) x /= tr;
    rho14 /= tr;
    rho23 /= tr;

    const double lim14 = std::sqrt(d[0] * d[3]);
    if (std::abs(rho14) > lim14 + kValidationSlack)
        throw BlockNotPSD("|rho14| = " + std::to_string(std::abs(rho14)) +
                          " exceeds sqrt(rho11*rho44) = " + std::to_string(lim14));
    if (std::abs(rho14) > lim14) rho14 = std::copysign(lim14, rho14);

    const double lim23 = std::sqrt(d[1] * d[2]);
    if (std::abs(rho23) > lim23 + kValidationSlack)
        throw BlockNotPSD("|rho23| = " + std::to_string(std::abs(rho23)) +
                          " exceeds sqrt(rho22*rho33) = " + std::to_string(lim23));
    if (std::abs(rho23) > lim23) rho23 = std::copysign(lim23, rho23);

    return XState(d[0], d[1], d[2], d[3], rho14, rho23);
}

Spectrum4 eigenvalues(const XState& state) {
    const double a = 0.5 * (state.rho11() + state.rho44());
    const double b = std::hypot(0.5 * (state.rho11() - state.rho44()), state.rho14());
    const double c = 0.5 * (state.rho22() + state.rho33());
    const double d = std::hypot(0.5 * (state.rho22() - state.rho33()), state.rho23());

    std::array<double, 4> eta{a + b, a - b, c + d, c - d};
    for (double& e : eta) {
        if (e < -kValidationSlack || e > 1.0 + kValidationSlack)
            throw NumericalFailure("x-state eigenvalue outside [0,1]: " + std::to_string(e));
        e = std::clamp(e, 0.0, 1.0);
    }
    std::sort(eta.begin(), eta.end(), std::greater<>());
    return {eta};
}

double von_neumann_entropy(const XState& state) {
    return shannon_entropy(eigenvalues(state).eta);
}

MarginalEntropies marginal_entropies(const XState& state) {
    return {binary_entropy(state.rho11() + state.rho22()),
            binary_entropy(state.rho11() + state.rho33())};
}

}  // namespace qdot
