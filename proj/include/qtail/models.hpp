#pragma once

#include "qtail/kernel.hpp"

namespace qtail {

// Two-node modified Jackson network: exogenous rates lam1/lam2, service
// rates mu1/mu2, boosted node-1 rate mu1_star >= mu1 active while node 2 is
// empty, routing probabilities r12/r21.
struct JacksonSpec {
    double lam1 = 0, lam2 = 0;
    double mu1 = 0, mu2 = 0;
    double mu1_star = 0;
    double r12 = 0, r21 = 0;
};

struct JacksonDerived {
    double lambda1 = 0, lambda2 = 0;  // solved throughputs
    double rho1 = 0, rho2 = 0;
    double stability_threshold = 0;   // mu1_star must exceed this
    bool stable = false;
};

// lambda_i = lam_i + lambda_{3-i} r_{3-i,i}; closed-form 2x2 solve.
JacksonDerived traffic_solve(const JacksonSpec& spec);

// stable iff rho2 < 1 and mu1_star > (lambda1 - mu1 rho2)/(1 - rho2)
JacksonDerived stability_check(const JacksonSpec& spec);

// Uniformized free kernel; rates auto-normalized by lam1+lam2+mu1_star+mu2
// (suppressed events become self-loops). Returns the normalization factor
// through *norm when non-null.
FreeKernel jackson_kernel(const JacksonSpec& spec, double* norm = nullptr);

// Bathroom model: couples arrive at rate nu (a northeast step), men's queue
// (horizontal) serves at alpha, ladies' queue (vertical) at beta.
struct BathroomSpec {
    double nu = 0, alpha = 0, beta = 0;
};

FreeKernel bathroom_kernel(const BathroomSpec& spec, double* norm = nullptr);

// Unique root z > 1 of 4 beta nu z^3 = ((alpha+beta+nu) z - alpha)^2 on the
// normalized rates; equals e^{theta1^b}. Requires alpha >= beta.
double bathroom_cubic_root(const BathroomSpec& spec);

}  // namespace qtail
