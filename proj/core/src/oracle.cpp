#include "qdot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>

namespace qdot::oracle {

Dense4 Dense4::from_xstate(const XState& s) noexcept {
    Dense4 m;
    m.symmetric = true;
    m(0, 0) = s.rho11();
    m(1, 1) = s.rho22();
    m(2, 2) = s.rho33();
    m(3, 3) = s.rho44();
    m(0, 3) = m(3, 0) = s.rho14();
    m(1, 2) = m(2, 1) = s.rho23();
    return m;
}

Dense4 Dense4::from_symmetric(const std::array<double, 16>& entries) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (entries[4 * i + j] != entries[4 * j + i])
                throw DomainError("from_symmetric: entries are not exactly symmetric");
    Dense4 m;
    m.a = entries;
    m.symmetric = true;
    return m;
}

Dense4 Dense4::mixture(const std::array<std::array<double, 4>, 4>& kets,
                       const std::array<double, 4>& weights) noexcept {
    Dense4 m;
    m.symmetric = true;
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                m(i, j) += weights[k] * kets[k][i] * kets[k][j];
    return m;
}

Dense4 multiply(const Dense4& lhs, const Dense4& rhs) noexcept {
    Dense4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += lhs(i, k) * rhs(k, j);
            out(i, j) = s;
        }
    return out;
}

std::array<double, 4> jacobi_eigenvalues(const Dense4& m) {
    if (!m.symmetric)
        throw DomainError("jacobi_eigenvalues: matrix is not flagged symmetric");

    Dense4 w = m;
    auto off_norm = [&w] {
        double s = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) s += 2.0 * w(i, j) * w(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_norm() < 1e-14) {
            std::array<double, 4> eig{w(0, 0), w(1, 1), w(2, 2), w(3, 3)};
            std::sort(eig.begin(), eig.end(), std::greater<>());
            return eig;
        }
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 4; ++q) {
                const double apq = w(p, q);
                if (apq == 0.0) continue;
                const double app = w(p, p), aqq = w(q, q);
                const double tau = (aqq - app) / (2.0 * apq);
                const double t =
                    (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = w(k, p), akq = w(k, q);
                    w(k, p) = w(p, k) = c * akp - s * akq;
                    w(k, q) = w(q, k) = s * akp + c * akq;
                }
                w(p, p) = app - t * apq;
                w(q, q) = aqq + t * apq;
                w(p, q) = w(q, p) = 0.0;
            }
    }
    throw NoConvergence("jacobi_eigenvalues: off-diagonal norm above 1e-14 after 100 sweeps");
}

namespace {

double det3(double a, double b, double c, double d, double e, double f,
            double g, double h, double i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

double det4(const Dense4& m) {
    double d = 0.0;
    for (int j = 0; j < 4; ++j) {
        double minor[9];
        int idx = 0;
        for (int r = 1; r < 4; ++r)
            for (int col = 0; col < 4; ++col) {
                if (col == j) continue;
                minor[idx++] = m(r, col);
            }
        const double cof = det3(minor[0], minor[1], minor[2], minor[3], minor[4],
                                minor[5], minor[6], minor[7], minor[8]);
        d += (j % 2 == 0 ? 1.0 : -1.0) * m(0, j) * cof;
    }
    return d;
}

double wilkinson_shift(double a, double b, double c, double d) {
    const double delta = 0.5 * (a - d);
    const double bc = b * c;
    const double disc = delta * delta + bc;
    if (disc < 0.0) return d;
    const double denom = delta + std::copysign(std::sqrt(disc), delta == 0.0 ? 1.0 : delta);
    if (denom == 0.0) return d;
    return d - bc / denom;
}

// One shifted QR step on the Hessenberg window [p..m] of h.
void qr_step(Dense4& h, int p, int m, double mu) {
    for (int i = p; i <= m; ++i) h(i, i) -= mu;

    double cs[3], sn[3];
    for (int k = p; k < m; ++k) {
        const double x = h(k, k), y = h(k + 1, k);
        const double r = std::hypot(x, y);
        const double ck = (r == 0.0) ? 1.0 : x / r;
        const double sk = (r == 0.0) ? 0.0 : y / r;
        cs[k - p] = ck;
        sn[k - p] = sk;
        for (int j = k; j <= m; ++j) {
            const double hkj = h(k, j), hk1j = h(k + 1, j);
            h(k, j) = ck * hkj + sk * hk1j;
            h(k + 1, j) = -sk * hkj + ck * hk1j;
        }
    }
    for (int k = p; k < m; ++k) {
        const double ck = cs[k - p], sk = sn[k - p];
        for (int i = p; i <= m; ++i) {
            const double hik = h(i, k), hik1 = h(i, k + 1);
            h(i, k) = ck * hik + sk * hik1;
            h(i, k + 1) = -sk * hik + ck * hik1;
        }
    }
    for (int i = p; i <= m; ++i) h(i, i) += mu;
}

// Roots of a monic quadratic x^2 + c1 x + c0 with (near-)real roots.
std::array<double, 2> quadratic_roots(double c1, double c0) {
    const double half = -0.5 * c1;
    double disc = half * half - c0;
    if (disc < 0.0) {
        if (disc < -1e-10 * std::max(1.0, half * half))
            throw NoConvergence("quadratic block has a genuinely complex pair");
        disc = 0.0;
    }
    const double r = std::sqrt(disc);
    return {half + r, half - r};
}

// Real roots of a monic polynomial given ascending coefficients c[0..deg-1]
// (constant term first), via a companion matrix and shifted QR.
void polynomial_roots(const double* c, int deg, double* roots) {
    if (deg == 0) return;
    if (deg == 1) {
        roots[0] = -c[0];
        return;
    }
    if (deg == 2) {
        const auto r = quadratic_roots(c[1], c[0]);
        roots[0] = r[0];
        roots[1] = r[1];
        return;
    }

    Dense4 h;
    for (int j = 0; j < deg; ++j) h(0, j) = -c[deg - 1 - j];
    for (int i = 1; i < deg; ++i) h(i, i - 1) = 1.0;

    auto subdiag_small = [&h](int i) {
        const double v = std::abs(h(i, i - 1));
        return v <= 1e-14 * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i))) || v < 1e-40;
    };

    int m = deg - 1;
    int found = 0;
    int iters = 0;
    while (m >= 0) {
        if (m == 0) {
            roots[found++] = h(0, 0);
            break;
        }
        if (subdiag_small(m)) {
            roots[found++] = h(m, m);
            --m;
            continue;
        }
        int p = m - 1;
        while (p > 0 && !subdiag_small(p)) --p;
        if (p == m - 1) {
            const double a = h(p, p), b = h(p, m), cc = h(m, p), d = h(m, m);
            const auto r = quadratic_roots(-(a + d), a * d - b * cc);
            roots[found++] = r[0];
            roots[found++] = r[1];
            m -= 2;
            continue;
        }
        if (++iters > 500)
            throw NoConvergence("companion QR did not converge within 500 steps");
        const double mu = (iters % 12 == 0)
                              ? h(m, m) + 0.75 * std::abs(h(m, m - 1))
                              : wilkinson_shift(h(m - 1, m - 1), h(m - 1, m), h(m, m - 1), h(m, m));
        qr_step(h, p, m, mu);
    }
}

}  // namespace

std::array<double, 4> product_eigenvalues(const Dense4& rho) {
    // (sy x sy) conjugation of a real matrix: signed reversal of both indices.
    static constexpr double kSign[4] = {-1.0, 1.0, 1.0, -1.0};
    Dense4 flip;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            flip(i, j) = kSign[i] * kSign[j] * rho(3 - i, 3 - j);

    const Dense4 m = multiply(rho, flip);
    const Dense4 m2 = multiply(m, m);
    const Dense4 m3 = multiply(m2, m);

    // Elementary symmetric polynomials from power sums (Newton identities).
    const double p1 = m.trace(), p2 = m2.trace(), p3 = m3.trace();
    const double e1 = p1;
    const double e2 = 0.5 * (e1 * p1 - p2);
    const double e3 = (p3 - e1 * p2 + e2 * p1) / 3.0;
    const double e4 = det4(m);

    // Monic characteristic polynomial, ascending coefficients.
    double c[4] = {e4, -e3, e2, -e1};

    // Peel off (near-)zero roots first; nilpotent products (pure product
    // states) would otherwise stall the shifted iteration.
    std::array<double, 4> out{};
    int nzero = 0;
    int deg = 4;
    while (deg > 0) {
        double scale = 1.0;
        for (int i = 1; i < deg; ++i) scale = std::max(scale, std::abs(c[i]));
        if (std::abs(c[0]) > 1e-60 * scale) break;
        ++nzero;
        --deg;
        for (int i = 0; i < deg; ++i) c[i] = c[i + 1];
    }
    polynomial_roots(c, deg, out.data() + nzero);

    for (double& v : out) {
        if (v < -1e-10)
            throw NumericalFailure("product eigenvalue is negative: " + std::to_string(v));
        if (v < 0.0) v = 0.0;
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::array<double, 2> Herm2::eigenvalues() const noexcept {
    const double mid = 0.5 * (a00 + a11);
    const double r =
        std::sqrt(0.25 * (a00 - a11) * (a00 - a11) + re01 * re01 + im01 * im01);
    return {mid + r, mid - r};
}

Herm2 trace_out_a(const Dense4& rho) noexcept {
    return {rho(0, 0) + rho(2, 2), rho(1, 1) + rho(3, 3), rho(0, 1) + rho(2, 3), 0.0};
}

Herm2 trace_out_b(const Dense4& rho) noexcept {
    return {rho(0, 0) + rho(1, 1), rho(2, 2) + rho(3, 3), rho(0, 2) + rho(1, 3), 0.0};
}

BMeasurement measure_on_b(const Dense4& rho, double theta, double phi) noexcept {
    using cd = std::complex<double>;
    const double ch = std::cos(0.5 * theta), sh = std::sin(0.5 * theta);
    const cd phase = std::polar(1.0, phi);
    const std::array<std::array<cd, 2>, 2> basis{{{ch, sh * phase}, {sh, -ch * phase}}};

    BMeasurement out;
    for (int o = 0; o < 2; ++o) {
        const auto& b = basis[o];
        cd m00{}, m01{}, m11{};
        for (int be = 0; be < 2; ++be)
            for (int bp = 0; bp < 2; ++bp) {
                const cd f = std::conj(b[be]) * b[bp];
                m00 += f * rho(be, bp);
                m01 += f * rho(be, 2 + bp);
                m11 += f * rho(2 + be, 2 + bp);
            }
        const double p = m00.real() + m11.real();
        out.prob[o] = p;
        if (p > 1e-300)
            out.conditional_a[o] =
                Herm2{m00.real() / p, m11.real() / p, m01.real() / p, m01.imag() / p};
    }
    return out;
}

}  // namespace qdot::oracle
