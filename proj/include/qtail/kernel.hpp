#pragma once

#include <string>
#include <vector>

#include "qtail/laurent.hpp"

namespace qtail {

// Markov additive kernel with general horizontal increments, nearest-neighbor
// phase moves, and a distinguished boundary phase 0. Interior rows carry the
// displacement transforms P (phase up), S (stay), Q (down); the boundary row
// carries P0 (up) and S0 (stay) plus a killing mass kappa = 1 - P0(1) - S0(1).
struct FreeKernel {
    LaurentPoly P, Q, S, P0, S0;
    double kappa = 0.0;
};

struct KernelDiagnostics {
    double interior_mass = 0.0;   // P(1)+Q(1)+S(1)
    double boundary_mass = 0.0;   // P0(1)+S0(1)
    double kappa = 0.0;
    int min_dx = 0, max_dx = 0;   // horizontal support bounds over all rows
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Structural checks: stochastic interior row, boundary mass 1 - kappa,
// positivity of p, q, p0. Returns diagnostics; never throws.
KernelDiagnostics validate(const FreeKernel& k);

// R+(t1,t2) = e^{t2} P(e^{t1}) + S(e^{t1}) + e^{-t2} Q(e^{t1})
double r_plus(const FreeKernel& k, double theta1, double theta2);
// R-(t1,t2) = e^{t2} P0(e^{t1}) + S0(e^{t1})
double r_minus(const FreeKernel& k, double theta1, double theta2);

// One-step masses of a twisted kernel plus the normalizer f = R+ at the
// twist point. u = min(p, q); in bridge twists p = q = u.
struct TwistedConstants {
    double p = 0, q = 0, s = 0, p0 = 0, s0 = 0, u = 0, kappa = 0, f = 1;
};

struct TwistResult {
    FreeKernel kernel;
    TwistedConstants constants;
};

// Exponential tilt by (theta1, theta2) normalized by f = R+, so interior
// rows are stochastic and any boundary deficit becomes kernel.kappa
// = 1 - R-/R+.
TwistResult twist(const FreeKernel& k, double theta1, double theta2);

// h(x,y) = e^{alpha x} e^{beta y} (1 + a0_slope y); a0_slope = kappa/p0 in
// bridge twists, 0 in jitter twists.
struct HarmonicFunction {
    double alpha = 0;
    double beta = 0;
    double a0_slope = 0;
    double hhat(double y) const;  // e^{beta y} (1 + a0_slope y)
};

// Level-dependent phase chain of the a0-refined bridge h-transform:
// p(y) = u a0(y+1)/a0(y), q(y) = u a0(y-1)/a0(y), s(y) = s for y > 0;
// boundary up-mass p0 + kappa, stay s0. Every row is stochastic.
struct BridgeChain {
    double u = 0, s = 0, p0 = 0, s0 = 0, kappa = 0;
    double a0(double y) const { return 1.0 + kappa * y / p0; }
    double up(int y) const;
    double down(int y) const;
    double stay(int y) const;
    double row_mass(int y) const { return up(y) + down(y) + stay(y); }
};

BridgeChain h_transform_bridge(const FreeKernel& I, const TwistedConstants& tc);

enum class Regime { Bridge, NullRecurrent, Jitter };

const char* regime_name(Regime r);

// Stationary measure of the twisted phase chain. Bridge kind is sigma-finite
// with phi(0) = 1; jitter kind is a probability with normalizer Gamma.
struct PhaseMeasure {
    enum class Kind { BridgeSigmaFinite, JitterProbability };
    Kind kind;
    double Gamma = 0.0;  // jitter only
    // stored chain constants
    double p = 0, q = 0, p0 = 0, u = 0, kappa = 0;
    double operator()(int y) const;
};

PhaseMeasure phase_stationary_measure(Regime regime, const TwistedConstants& tc);

// Sum_{n>=1} p0 (p0+kappa) / ((p0+kappa n)(p0+kappa(n+1))); telescopes to
// p0/kappa for kappa > 0 and diverges (returns +infinity) for kappa = 0.
double transience_sum(double p0, double kappa);

// Config/report text form: {"-1": 0.25, "0": 0.5, "1": 0.25}
LaurentPoly parse_laurent(const std::string& json_text);

}  // namespace qtail
