#pragma once

#include <utility>

#include "qtail/kernel.hpp"

namespace qtail {

// Solution of one of the twist-point systems.
// Bridge/NullRecurrent: dR+/dtheta2 = 0 and R+ = 1 at (theta1, theta2).
// Jitter: R+ = R- = 1 and theta2 < beta0(theta1).
struct TwistPoint {
    double theta1 = 0;
    double theta2 = 0;
    Regime regime = Regime::Bridge;
    double kappa = 0;  // 1 - R-(theta^b); 0 for NullRecurrent and Jitter
};

struct SpectralPoint {
    double gamma = 0;
    double radius = 0;      // r(J_gamma)
    double log_radius = 0;  // Lambda(gamma)
};

// Minimizer of R+ over theta2 at fixed theta1: (1/2) ln(Q(e^t1)/P(e^t1)).
double beta0(const FreeKernel& k, double theta1);

// g(t1) = S(e^{t1}) + 2 sqrt(P Q)(e^{t1}) - 1, the bridge residual.
double bridge_residual(const FreeKernel& k, double theta1);

// Unique theta1 > 0 with bridge_residual = 0, theta2 = beta0(theta1).
// Bracket by doubling on [1e-9, 64], bisect to width 1e-13, one Newton
// polish. Requires g(0) < -1e-12 (nonzero vertical drift of the free walk).
TwistPoint solve_bridge_point(const FreeKernel& k);

// Lower branch of R+(theta1, .) = 1: e^{beta1} = smaller root of
// P w^2 + (S - 1) w + Q = 0 at e^{theta1}. Requires theta1 <= theta1^b.
double beta1(const FreeKernel& k, double theta1);

// theta1 in (0, theta1^b] with R-(theta1, beta1(theta1)) = 1, excluding the
// trivial root at 0 by a 256-point geometric scan.
TwistPoint solve_jitter_point(const FreeKernel& k);

// Regime decision at tolerance tol on |R-(theta^b) - 1|.
TwistPoint classify(const FreeKernel& k, double tol = 1e-9);

// r(J_gamma) per the two-branch rule: bridge branch R+(gamma, beta0) when
// R-(gamma, beta0) <= R+(gamma, beta0), else R+(gamma, beta) at the beta
// solving R+ = R-.
SpectralPoint spectral_radius(const FreeKernel& k, double gamma);

// First-return transform check: series = sum_{n<=nmax} f_n u^n by dynamic
// programming over the phase chain of I, against the closed form of the
// return-time transform. Requires p = q, |u s| < 1, and u inside the
// convergence region.
std::pair<double, double> psi_cross_check(const FreeKernel& I, double u, int nmax);

}  // namespace qtail
