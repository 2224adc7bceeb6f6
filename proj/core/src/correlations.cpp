#include "qdot/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace qdot {

namespace {
constexpr double kPi = std::numbers::pi;
}

double concurrence(const XState& s) {
    const double c1 = std::abs(s.rho23()) - std::sqrt(s.rho11() * s.rho44());
    const double c2 = std::abs(s.rho14()) - std::sqrt(s.rho22() * s.rho33());
    return 2.0 * std::max({0.0, c1, c2});
}

double wootters_concurrence_oracle(const oracle::Dense4& rho) {
    std::array<double, 4> lams;
    try {
        const auto ev = oracle::product_eigenvalues(rho);
        for (int i = 0; i < 4; ++i) lams[i] = std::sqrt(ev[i]);
    } catch (const NoConvergence& e) {
        throw NumericalFailure(std::string("wootters_concurrence_oracle: ") + e.what());
    }
    std::sort(lams.begin(), lams.end(), std::greater<>());
    return std::max(0.0, lams[0] - lams[1] - lams[2] - lams[3]);
}

DiscordResult quantum_discord(const XState& s) {
    const Spectrum4 spec = eigenvalues(s);
    double sum_eta = 0.0;
    for (double e : spec.eta) sum_eta += xlog2x(e);

    const double hb = binary_entropy(s.rho11() + s.rho33());
    const double coh = std::abs(s.rho14()) + std::abs(s.rho23());
    const double tau =
        std::sqrt(std::pow(1.0 - 2.0 * (s.rho33() + s.rho44()), 2) + 4.0 * coh * coh);
    const double d1 = binary_entropy(0.5 * (1.0 + tau));
    const double sum_diag = xlog2x(s.rho11()) + xlog2x(s.rho22()) +
                            xlog2x(s.rho33()) + xlog2x(s.rho44());
    const double d2 = -sum_diag + hb;

    const double q1 = hb + sum_eta + d1;
    const double q2 = hb + sum_eta + d2;
    double qd = std::min(q1, q2);
    if (qd < 0.0 && qd >= -1e-9) qd = 0.0;
    return {qd, q1 <= q2 ? DiscordBranch::Q1 : DiscordBranch::Q2};
}

double mutual_information(const XState& s) {
    const Spectrum4 spec = eigenvalues(s);
    double sum_eta = 0.0;
    for (double e : spec.eta) sum_eta += xlog2x(e);
    return -xlog2x(s.rho11() + s.rho22()) - xlog2x(s.rho33() + s.rho44())
           - xlog2x(s.rho11() + s.rho33()) - xlog2x(s.rho22() + s.rho44())
           + sum_eta;
}

double discord_numeric_oracle(const XState& state, int grid_resolution) {
    if (grid_resolution < 90)
        throw DomainError("discord_numeric_oracle: grid_resolution must be >= 90");

    const auto rho = oracle::Dense4::from_xstate(state);
    const double s_a = shannon_entropy(oracle::trace_out_b(rho).eigenvalues());
    const double s_b = shannon_entropy(oracle::trace_out_a(rho).eigenvalues());
    const double s_ab = shannon_entropy(oracle::jacobi_eigenvalues(rho));
    const double mi = s_a + s_b - s_ab;

    auto classical_j = [&](double theta, double phi) {
        const auto m = oracle::measure_on_b(rho, theta, phi);
        double cond = 0.0;
        for (int o = 0; o < 2; ++o)
            if (m.prob[o] > 0.0)
                cond += m.prob[o] * shannon_entropy(m.conditional_a[o].eigenvalues());
        return s_a - cond;
    };

    const double theta_step = kPi / (grid_resolution - 1);
    const double phi_step = kPi / grid_resolution;
    double best = -1.0, best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i < grid_resolution; ++i) {
        const double theta = i * theta_step;
        for (int j = 0; j < grid_resolution; ++j) {
            const double phi = j * phi_step;
            const double v = classical_j(theta, phi);
            if (v > best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // local refinement: coordinate descent with halving steps
    double ht = theta_step, hp = phi_step;
    for (int it = 0; it < 20; ++it) {
        for (double d : {-ht, ht}) {
            const double t = std::clamp(best_theta + d, 0.0, kPi);
            const double v = classical_j(t, best_phi);
            if (v > best) {
                best = v;
                best_theta = t;
            }
        }
        for (double d : {-hp, hp}) {
            double p = std::fmod(best_phi + d, kPi);
            if (p < 0.0) p += kPi;
            const double v = classical_j(best_theta, p);
            if (v > best) {
                best = v;
                best_phi = p;
            }
        }
        ht *= 0.5;
        hp *= 0.5;
    }
    return mi - best;
}

CorrelationReport correlation_report(const XState& state) {
    const DiscordResult qd = quantum_discord(state);
    return {concurrence(state), qd.bits, mutual_information(state), qd.branch};
}

}  // namespace qdot
