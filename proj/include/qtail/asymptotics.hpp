#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtail/greens.hpp"
#include "qtail/kernel.hpp"
#include "qtail/spectral.hpp"

namespace qtail {

// Complete tail law pi(l, y) ~ f e^{-theta1 l} l^{poly_exponent} constant
// * profile(y), assembled from the classified twist point.
struct TailLaw {
    Regime regime = Regime::Bridge;
    double theta1 = 0, theta2 = 0;
    double poly_exponent = 0;  // -3/2, -1/2 or 0
    double constant = 0;       // C+, C0 (proof-consistent) or 1/dtilde
    std::optional<double> f;   // prefactor when estimated
    std::optional<double> f_se;
    std::optional<double> dtilde;          // jitter drift
    std::optional<double> dtilde_printed;  // the variant as printed
    std::optional<double> C0_printed;      // null-recurrent only
    std::vector<std::string> warnings;

    // profile parameters
    TwistedConstants tc;       // twisted one-step masses at the law's point
    double Gamma = 0;          // jitter normalizer
    double kappa = 0;          // boundary killing of the crude twist
    // exact value of the composed law at y = 0 relative to profile(0)
    // (= u/p0 in the bridge case, 1 otherwise)
    double boundary_ratio = 1.0;

    double d_plus = 0;
};

// Classify and assemble the law. Requires a stochastic free kernel.
TailLaw analyze(const FreeKernel& k, double tol = 1e-9);

// Bridge: e^{-theta2 y} (p0/u)(1 + kappa y / p0)  (linear a0 profile)
// NullRecurrent: e^{-theta2 y}
// Jitter: e^{-theta2 y} phi(y)
double tail_profile(const TailLaw& law, int y);

// Squared-phi variant (for comparison only).
double tail_profile_squared(const TailLaw& law, int y);

// Appends warnings: cascade condition rho2 e^{theta2} >= 1 (boundary_ratio
// of the second queue; for the bathroom model pass nu/beta), d+ <= 0,
// aperiodicity failure, jitter with p >= q.
void validity_checks(const FreeKernel& k, TailLaw& law,
                     std::optional<double> rho2 = std::nullopt);

}  // namespace qtail
