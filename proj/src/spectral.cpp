#include "qtail/spectral.hpp"

#include <cmath>
#include <vector>

#include "qtail/errors.hpp"

namespace qtail {

double beta0(const FreeKernel& k, double theta1) {
    const double z = std::exp(theta1);
    const double P = k.P.eval(z), Q = k.Q.eval(z);
    if (!(P > 0.0) || !(Q > 0.0))
        throw HypothesisError("beta0: P or Q vanishes at e^{theta1}");
    return 0.5 * std::log(Q / P);
}

double bridge_residual(const FreeKernel& k, double theta1) {
    const double z = std::exp(theta1);
    return k.S.eval(z) + 2.0 * std::sqrt(k.P.eval(z) * k.Q.eval(z)) - 1.0;
}

namespace {
double bridge_residual_deriv(const FreeKernel& k, double theta1) {
    const double z = std::exp(theta1);
    const double P = k.P.eval(z), Q = k.Q.eval(z);
    const double dP = k.P.derivative(z), dQ = k.Q.derivative(z);
    return z * (k.S.derivative(z) + (dP * Q + P * dQ) / std::sqrt(P * Q));
}
}  // namespace

TwistPoint solve_bridge_point(const FreeKernel& k) {
    if (bridge_residual(k, 0.0) >= -1e-12)
        throw HypothesisError(
            "solve_bridge_point: degenerate drift, S(1) + 2 sqrt(P(1)Q(1)) >= 1");
    double lo = 1e-9, hi = 1e-9;
    while (bridge_residual(k, hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 64.0)
            throw HypothesisError(
                "solve_bridge_point: no root in (0, 64] (heavy-tail/unstable input)");
    }
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (bridge_residual(k, mid) < 0.0 ? lo : hi) = mid;
    }
    double t1 = 0.5 * (lo + hi);
    const double d = bridge_residual_deriv(k, t1);
    if (d > 0.0) {
        const double polished = t1 - bridge_residual(k, t1) / d;
        if (polished > lo - (hi - lo) && polished < hi + (hi - lo)) t1 = polished;
    }
    TwistPoint tp;
    tp.theta1 = t1;
    tp.theta2 = beta0(k, t1);
    tp.regime = Regime::Bridge;
    tp.kappa = 1.0 - r_minus(k, tp.theta1, tp.theta2);
    return tp;
}

double beta1(const FreeKernel& k, double theta1) {
    const double z = std::exp(theta1);
    const double P = k.P.eval(z), S = k.S.eval(z), Q = k.Q.eval(z);
    const double disc = (1.0 - S) * (1.0 - S) - 4.0 * P * Q;
    if (disc < -1e-14)
        throw HypothesisError("beta1: negative discriminant (theta1 beyond bridge point)");
    const double w = ((1.0 - S) - std::sqrt(std::max(disc, 0.0))) / (2.0 * P);
    if (!(w > 0.0)) throw HypothesisError("beta1: nonpositive root");
    return std::log(w);
}

TwistPoint solve_jitter_point(const FreeKernel& k) {
    const TwistPoint bp = solve_bridge_point(k);
    auto res = [&](double t1) { return r_minus(k, t1, beta1(k, t1)) - 1.0; };

    // geometric grid over (theta1^b * 1e-6, theta1^b]; the trivial root at
    // theta1 = 0 is excluded by construction
    const int n = 256;
    const double a = bp.theta1 * 1e-6;
    const double ratio = std::pow(bp.theta1 / a, 1.0 / (n - 1));
    double lo = 0.0, hi = 0.0;
    double prev_t = a, prev_v = res(a);
    for (int i = 1; i < n; ++i) {
        const double t = a * std::pow(ratio, i);
        const double v = res(t);
        if (prev_v * v <= 0.0 && std::abs(prev_v) > 0.0) {
            lo = prev_t;
            hi = t;
        }
        prev_t = t;
        prev_v = v;
    }
    if (hi == 0.0) throw HypothesisError("solve_jitter_point: no sign change on scan grid");
    double flo = res(lo);
    while (hi - lo > 1e-15 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        const double fm = res(mid);
        if (flo * fm <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    TwistPoint tp;
    tp.theta1 = 0.5 * (lo + hi);
    tp.theta2 = beta1(k, tp.theta1);
    tp.regime = Regime::Jitter;
    tp.kappa = 0.0;
    return tp;
}

TwistPoint classify(const FreeKernel& k, double tol) {
    TwistPoint bp = solve_bridge_point(k);
    const double delta = r_minus(k, bp.theta1, bp.theta2);
    if (delta < 1.0 - tol) {
        bp.regime = Regime::Bridge;
        bp.kappa = 1.0 - delta;
        return bp;
    }
    if (delta <= 1.0 + tol) {
        bp.regime = Regime::NullRecurrent;
        bp.kappa = 0.0;  // theta^j = theta^b
        return bp;
    }
    return solve_jitter_point(k);
}

SpectralPoint spectral_radius(const FreeKernel& k, double gamma) {
    const double b0 = beta0(k, gamma);
    const double bridge_value = r_plus(k, gamma, b0);
    SpectralPoint sp;
    sp.gamma = gamma;
    if (r_minus(k, gamma, b0) <= bridge_value) {
        sp.radius = bridge_value;
    } else {
        // jitter branch: solve R+(gamma, beta) = R-(gamma, beta) for
        // w = e^{beta}: (P - P0) w^2 + (S - S0) w + Q = 0
        const double z = std::exp(gamma);
        const double aq = k.P.eval(z) - k.P0.eval(z);
        const double bq = k.S.eval(z) - k.S0.eval(z);
        const double cq = k.Q.eval(z);
        double w = -1.0;
        if (std::abs(aq) < 1e-14) {
            if (std::abs(bq) < 1e-14)
                throw HypothesisError("spectral_radius: degenerate R+ = R- equation");
            w = -cq / bq;
        } else {
            const double disc = bq * bq - 4.0 * aq * cq;
            if (disc < 0.0)
                throw HypothesisError("spectral_radius: R+ = R- has no real solution");
            const double r1 = (-bq - std::sqrt(disc)) / (2.0 * aq);
            const double r2 = (-bq + std::sqrt(disc)) / (2.0 * aq);
            const double wmax = std::exp(b0);
            // unique beta <= beta0 with positive w
            for (double cand : {std::min(r1, r2), std::max(r1, r2)})
                if (cand > 0.0 && cand <= wmax * (1.0 + 1e-12)) {
                    w = cand;
                    break;
                }
        }
        if (!(w > 0.0))
            throw HypothesisError("spectral_radius: no positive solution of R+ = R-");
        sp.radius = r_plus(k, gamma, std::log(w));
    }
    sp.log_radius = std::log(sp.radius);
    return sp;
}

std::pair<double, double> psi_cross_check(const FreeKernel& I, double u, int nmax) {
    const double p = I.P.mass(), q = I.Q.mass(), s = I.S.mass();
    const double p0 = I.P0.mass(), s0 = I.S0.mass();
    if (std::abs(p - q) > 1e-10)
        throw HypothesisError("psi_cross_check: not a crude bridge twist (p != q)");
    if (!(std::abs(u * s) < 1.0))
        throw DomainError("psi_cross_check: |u s| >= 1 violates the geometric-stay condition");
    const double ratio = (1.0 - s) / (1.0 - u * s);
    const double root_arg =
        1.0 - 4.0 * (p / (p + q)) * (q / (p + q)) * u * u * ratio * ratio;
    if (root_arg < -1e-12)
        throw DomainError(
            "psi_cross_check: u outside the convergence region (square-root argument negative)");

    const double closed =
        s0 * u + (1.0 - u * s) / (1.0 - s) * ((p + q) / p) * p0 * 0.5 *
                     (1.0 - std::sqrt(std::max(root_arg, 0.0)));

    // first-return DP over the phase chain: g[m][y] = P(first hit of 0 at
    // step m | start y); f_1 = s0, f_n = p0 g_{n-1}(1)
    const int ymax = nmax + 1;
    std::vector<double> g(ymax + 2, 0.0), gn(ymax + 2, 0.0);
    g[1] = q;  // g_1(y) = q [y == 1]
    double series = s0 * u;  // f_1 = s0 (stay at the boundary)
    double upow = u * u;     // u^n for n = 2, ...
    series += p0 * g[1] * upow;  // n = 2 uses g_1(1)
    for (int m = 2; m + 1 <= nmax; ++m) {
        // g_m from g_{m-1}
        for (int y = 1; y <= std::min(m + 1, ymax); ++y)
            gn[y] = s * g[y] + p * g[y + 1] + (y >= 2 ? q * g[y - 1] : 0.0);
        std::swap(g, gn);
        upow *= u;
        series += p0 * g[1] * upow;  // f_{m+1} = p0 g_m(1)
    }
    return {series, closed};
}

}  // namespace qtail
