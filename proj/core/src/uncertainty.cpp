#include "qdot/uncertainty.hpp"

#include <algorithm>
#include <cmath>

#include "qdot/correlations.hpp"

namespace qdot {

double complementarity(const QubitBasis& q, const QubitBasis& r) {
    auto inner = [](const Ket2& x, const Ket2& y) {
        return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1];
    };
    auto require_orthonormal = [&](const QubitBasis& b, const char* which) {
        if (std::abs(inner(b[0], b[0]) - 1.0) > 1e-12 ||
            std::abs(inner(b[1], b[1]) - 1.0) > 1e-12 ||
            std::abs(inner(b[0], b[1])) > 1e-12)
            throw BasisNotOrthonormal(std::string(which) + " basis is not orthonormal");
    };
    require_orthonormal(q, "first");
    require_orthonormal(r, "second");

    double c = 0.0;
    for (const auto& qi : q)
        for (const auto& rj : r) c = std::max(c, std::norm(inner(qi, rj)));
    return c;
}

MeasuredState post_measurement(const XState& s, Observable observable) {
    MeasuredState out;
    out.joint.symmetric = true;

    if (observable == Observable::SigmaZ) {
        // dephasing in the computational basis keeps the diagonal only
        out.joint(0, 0) = s.rho11();
        out.joint(1, 1) = s.rho22();
        out.joint(2, 2) = s.rho33();
        out.joint(3, 3) = s.rho44();
        out.prob = {s.rho11() + s.rho22(), s.rho33() + s.rho44()};
        if (out.prob[0] > 0.0)
            out.memory[0] = {s.rho11() / out.prob[0], s.rho22() / out.prob[0], 0.0, 0.0};
        if (out.prob[1] > 0.0)
            out.memory[1] = {s.rho33() / out.prob[1], s.rho44() / out.prob[1], 0.0, 0.0};
        return out;
    }

    // sigma_x on A: rho^{QB} = (rho + (sx (x) I) rho (sx (x) I)) / 2
    const double d0 = 0.5 * (s.rho11() + s.rho33());
    const double d1 = 0.5 * (s.rho22() + s.rho44());
    const double off = 0.5 * (s.rho14() + s.rho23());
    out.joint(0, 0) = out.joint(2, 2) = d0;
    out.joint(1, 1) = out.joint(3, 3) = d1;
    out.joint(0, 3) = out.joint(3, 0) = off;
    out.joint(1, 2) = out.joint(2, 1) = off;
    out.prob = {0.5, 0.5};
    const double coh = s.rho14() + s.rho23();
    out.memory[0] = {s.rho11() + s.rho33(), s.rho22() + s.rho44(), coh, 0.0};
    out.memory[1] = {s.rho11() + s.rho33(), s.rho22() + s.rho44(), -coh, 0.0};
    return out;
}

double conditional_entropy(const XState& s) {
    return von_neumann_entropy(s) - marginal_entropies(s).subsystem_b;
}

double holevo_z(const XState& s) {
    return -xlog2x(s.rho11() + s.rho22()) - xlog2x(s.rho33() + s.rho44())
           - xlog2x(s.rho11() + s.rho33()) - xlog2x(s.rho22() + s.rho44())
           + xlog2x(s.rho11()) + xlog2x(s.rho22()) + xlog2x(s.rho33()) + xlog2x(s.rho44());
}

double holevo_x(const XState& s) {
    const double coh = s.rho14() + s.rho23();
    const double k =
        std::sqrt(4.0 * coh * coh + std::pow(1.0 - 2.0 * (s.rho22() + s.rho44()), 2));
    const double xi_minus = 0.25 * (1.0 - k);
    const double xi_plus = 0.25 * (1.0 + k);
    return 1.0 - xlog2x(s.rho11() + s.rho33()) - xlog2x(s.rho22() + s.rho44())
           + 2.0 * xlog2x(xi_minus) + 2.0 * xlog2x(xi_plus);
}

double holevo_from_measurement(const MeasuredState& measured) {
    double h = shannon_entropy(oracle::trace_out_a(measured.joint).eigenvalues());
    for (int o = 0; o < 2; ++o)
        if (measured.prob[o] > 0.0)
            h -= measured.prob[o] * shannon_entropy(measured.memory[o].eigenvalues());
    return h;
}

double berta_bound(const XState& s) {
    return 1.0 + conditional_entropy(s);
}

double adabi_bound(const XState& s) {
    const double delta = mutual_information(s) - holevo_x(s) - holevo_z(s);
    return berta_bound(s) + std::max(0.0, delta);
}

double uncertainty_lhs(const XState& s) {
    const auto measured_x = post_measurement(s, Observable::SigmaX);
    const auto measured_z = post_measurement(s, Observable::SigmaZ);
    const double s_b =
        shannon_entropy(oracle::trace_out_a(oracle::Dense4::from_xstate(s)).eigenvalues());
    const double s_xb = shannon_entropy(oracle::jacobi_eigenvalues(measured_x.joint));
    const double s_zb = shannon_entropy(oracle::jacobi_eigenvalues(measured_z.joint));
    return (s_xb - s_b) + (s_zb - s_b);
}

UncertaintyReport uncertainty_report(const XState& s) {
    UncertaintyReport r;
    r.conditional_entropy = conditional_entropy(s);
    r.holevo_x = holevo_x(s);
    r.holevo_z = holevo_z(s);
    r.delta = mutual_information(s) - r.holevo_x - r.holevo_z;
    r.complementarity_term = 1.0;
    r.berta_bound = r.complementarity_term + r.conditional_entropy;
    r.adabi_bound = r.berta_bound + std::max(0.0, r.delta);
    r.lhs = uncertainty_lhs(s);
    return r;
}

}  // namespace qdot
