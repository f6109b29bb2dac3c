#include "qtail/models.hpp"

#include <cmath>
#include <map>

#include "qtail/errors.hpp"

namespace qtail {

namespace {
void check_jackson(const JacksonSpec& s) {
    if (s.lam1 < 0 || s.lam2 < 0 || s.mu1 <= 0 || s.mu2 <= 0 || s.r12 < 0 ||
        s.r21 < 0 || s.r12 > 1 || s.r21 > 1)
        throw DomainError("jackson: rates must be positive, routing in [0,1]");
    if (s.mu1_star < s.mu1) throw DomainError("jackson: mu1_star < mu1");
    if (s.r12 * s.r21 >= 1.0)
        throw DomainError("jackson: r12 r21 >= 1 (closed network)");
}
}  // namespace

JacksonDerived traffic_solve(const JacksonSpec& s) {
    check_jackson(s);
    JacksonDerived d;
    const double det = 1.0 - s.r12 * s.r21;
    d.lambda1 = (s.lam1 + s.lam2 * s.r21) / det;
    d.lambda2 = (s.lam2 + s.lam1 * s.r12) / det;
    if (!(d.lambda1 > 0.0) || !(d.lambda2 > 0.0))
        throw DomainError("jackson: degenerate traffic (lambda_i = 0)");
    d.rho1 = d.lambda1 / s.mu1;
    d.rho2 = d.lambda2 / s.mu2;
    return d;
}

JacksonDerived stability_check(const JacksonSpec& s) {
    JacksonDerived d = traffic_solve(s);
    d.stability_threshold = (d.lambda1 - s.mu1 * d.rho2) / (1.0 - d.rho2);
    d.stable = d.rho2 < 1.0 && s.mu1_star > d.stability_threshold;
    return d;
}

FreeKernel jackson_kernel(const JacksonSpec& spec, double* norm) {
    check_jackson(spec);
    const double tot = spec.lam1 + spec.lam2 + spec.mu1_star + spec.mu2;
    if (norm) *norm = tot;
    const double l1 = spec.lam1 / tot, l2 = spec.lam2 / tot;
    const double m1 = spec.mu1 / tot, m2 = spec.mu2 / tot, m1s = spec.mu1_star / tot;
    const double r12 = spec.r12, r21 = spec.r21;

    FreeKernel k;
    k.P = LaurentPoly(std::map<int, double>{{0, l2}, {-1, m1 * r12}});
    k.Q = LaurentPoly(std::map<int, double>{{0, m2 * (1.0 - r21)}, {1, m2 * r21}});
    k.S = LaurentPoly(
        std::map<int, double>{{1, l1}, {-1, m1 * (1.0 - r12)}, {0, m1s - m1}});
    k.P0 = LaurentPoly(std::map<int, double>{{0, l2}, {-1, m1s * r12}});
    k.S0 = LaurentPoly(
        std::map<int, double>{{1, l1}, {-1, m1s * (1.0 - r12)}, {0, m2}});
    k.kappa = 0.0;
    return k;
}

FreeKernel bathroom_kernel(const BathroomSpec& spec, double* norm) {
    if (spec.nu <= 0 || spec.alpha <= 0 || spec.beta <= 0)
        throw DomainError("bathroom: rates must be positive");
    const double tot = spec.nu + spec.alpha + spec.beta;
    if (norm) *norm = tot;
    const double nu = spec.nu / tot, a = spec.alpha / tot, b = spec.beta / tot;

    FreeKernel k;
    k.P = LaurentPoly(std::map<int, double>{{1, nu}});
    k.Q = LaurentPoly(std::map<int, double>{{0, b}});
    k.S = LaurentPoly(std::map<int, double>{{-1, a}});
    k.P0 = LaurentPoly(std::map<int, double>{{1, nu}});
    k.S0 = LaurentPoly(std::map<int, double>{{-1, a}, {0, b}});
    k.kappa = 0.0;
    return k;
}

double bathroom_cubic_root(const BathroomSpec& spec) {
    const double tot = spec.nu + spec.alpha + spec.beta;
    const double nu = spec.nu / tot, a = spec.alpha / tot, b = spec.beta / tot;
    if (a < b)
        throw HypothesisError("bathroom_cubic_root: alpha < beta is the jitter regime");
    auto res = [&](double z) {
        const double lin = (a + b + nu) * z - a;
        return 4.0 * b * nu * z * z * z - lin * lin;
    };
    double lo = 1.0 + 1e-9, hi = 64.0;
    if (!(res(lo) < 0.0))
        throw HypothesisError("bathroom_cubic_root: no bracketing at z = 1+");
    if (!(res(hi) > 0.0))
        throw HypothesisError("bathroom_cubic_root: no root below z = 64");
    while (hi - lo > 1e-14 * hi) {
        const double mid = 0.5 * (lo + hi);
        (res(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace qtail
