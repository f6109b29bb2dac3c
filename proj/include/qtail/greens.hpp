#pragma once

#include <complex>
#include <vector>

#include "qtail/kernel.hpp"

namespace qtail {

// Horizontal drift above the x-axis: P'(1) + Q'(1) + S'(1).
double d_plus(const FreeKernel& I);

// Return-time generating-function bundle for a bridge-normalized twist
// (p = q). F(z) = A(z) - B(z) sqrt(C(z)) sqrt(1-z) with principal square
// roots; C is evaluated by its limit 2 d+/(1-s) for |1-z| < 1e-6.
class GreenBundle {
  public:
    GreenBundle(const FreeKernel& I);

    std::complex<double> F(std::complex<double> z) const;
    std::complex<double> A(std::complex<double> z) const;
    std::complex<double> B(std::complex<double> z) const;
    std::complex<double> C(std::complex<double> z) const;
    std::complex<double> D(std::complex<double> z) const;

    // radius of convergence of the return-time transform; 1 for p = q
    double radiusR() const { return radiusR_; }
    double c_limit() const { return c_limit_; }  // C(1) = 2 d+/(1-s)

  private:
    FreeKernel I_;
    double p_, q_, s_, radiusR_, c_limit_;
};

GreenBundle return_transform(const FreeKernel& I);

// E_{(0,y)}[z^{V0[tau]}] = base(z)^y; y = 0 gives F(z).
double excursion_transform(const FreeKernel& I, int y, double z);

// First-return-mass law by number of up-steps: f_n = c_{n-1} p0
// (p/(p+q))^{n-1} (q/(p+q))^n, with sum 1 - kappa.
struct ExcursionLaw {
    double return_mass = 0;             // 1 - kappa
    std::vector<double> up_count_masses;  // f_1 .. f_nmax
};

ExcursionLaw excursion_law(const FreeKernel& I, int nmax);

// Catalan number c_n by the floating-point recurrence.
double catalan(int n);

struct AperiodicityReport {
    bool pass = false;
    int r_UD = 0;        // period of P*Q
    int r_S = 0;         // period of S (when s > 0)
    bool F_period_ok = false;
};

// Prop.-1 aperiodicity (pass) and the weaker Prop.-2 condition (F_period_ok),
// with the gcd(0,n) = n convention for zero-only supports.
AperiodicityReport aperiodicity_check(const FreeKernel& I);

struct TailConstants {
    enum class Kind { Cplus, Czero };
    Kind kind;
    double value = 0;          // C+ or the proof-consistent C0
    double value_printed = 0;  // the constant as printed in the source statement
    double d_plus = 0;
};

// C+ = (p0/kappa^2) sqrt(d+ / (2 pi (1-s))) for kappa > 0;
// C0 = (1/p0) sqrt((1-s) / (2 pi d+)) for kappa = 0 (proof-consistent form;
// value_printed carries sqrt((1-s)/(2 pi d+))).
TailConstants tail_constants(const FreeKernel& I, const TwistedConstants& tc);

// value * l^{-3/2} or value * l^{-1/2} by kind.
double asymptotic_greens(const TailConstants& c, double kappa, int l);

}  // namespace qtail
