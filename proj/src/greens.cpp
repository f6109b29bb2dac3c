#include "qtail/greens.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "qtail/errors.hpp"

namespace qtail {

double d_plus(const FreeKernel& I) {
    return I.P.mean() + I.Q.mean() + I.S.mean();
}

GreenBundle::GreenBundle(const FreeKernel& I) : I_(I) {
    p_ = I.P.mass();
    q_ = I.Q.mass();
    s_ = I.S.mass();
    if (std::abs(p_ - q_) > 1e-10)
        throw HypothesisError("return_transform: kernel is not bridge-normalized (p != q)");
    const double dp = d_plus(I);
    if (!(dp > 0.0)) throw HypothesisError("return_transform: d+ <= 0");
    c_limit_ = 2.0 * dp / (1.0 - s_);
    radiusR_ = (p_ + q_) / (2.0 * std::sqrt(p_ * q_) * (1.0 - s_) + s_ * (p_ + q_));
}

std::complex<double> GreenBundle::B(std::complex<double> z) const {
    return (1.0 - I_.S.eval(z)) / (1.0 - s_) * ((p_ + q_) / I_.P.eval(z)) *
           I_.P0.eval(z) * 0.5;
}

std::complex<double> GreenBundle::A(std::complex<double> z) const {
    return I_.S0.eval(z) + B(z);
}

std::complex<double> GreenBundle::C(std::complex<double> z) const {
    if (std::abs(1.0 - z) < 1e-6) return c_limit_;
    const std::complex<double> ratio = (1.0 - s_) / (1.0 - I_.S.eval(z));
    const std::complex<double> inner =
        1.0 - 4.0 * I_.P.eval(z) * I_.Q.eval(z) / ((p_ + q_) * (p_ + q_)) * ratio * ratio;
    return inner / (1.0 - z);
}

std::complex<double> GreenBundle::D(std::complex<double> z) const {
    const std::complex<double> s0z = I_.S0.eval(z);
    return I_.P.eval(z) * (1.0 - s0z) * (1.0 - s0z) -
           (1.0 - I_.S.eval(z)) / (1.0 - s_) * (p_ + q_) * I_.P0.eval(z) * (1.0 - s0z) +
           I_.P0.eval(z) * I_.P0.eval(z) * I_.Q.eval(z);
}

std::complex<double> GreenBundle::F(std::complex<double> z) const {
    // principal branch, cut along the negative real axis
    return A(z) - B(z) * std::sqrt(C(z)) * std::sqrt(1.0 - z);
}

GreenBundle return_transform(const FreeKernel& I) { return GreenBundle(I); }

double excursion_transform(const FreeKernel& I, int y, double z) {
    if (y < 0) throw DomainError("excursion_transform: y < 0");
    GreenBundle gb(I);
    if (y == 0) {
        const std::complex<double> f = gb.F(z);
        if (std::abs(f.imag()) > 1e-12)
            throw DomainError("excursion_transform: z outside the real convergence region");
        return f.real();
    }
    const double p = I.P.mass(), q = I.Q.mass(), s = I.S.mass();
    const double Sz = I.S.eval(z), Pz = I.P.eval(z), Qz = I.Q.eval(z);
    const double ratio = (1.0 - s) / (1.0 - Sz);
    const double root_arg = 1.0 - 4.0 * Pz * Qz / ((p + q) * (p + q)) * ratio * ratio;
    if (root_arg < -1e-12 || Sz >= 1.0)
        throw DomainError("excursion_transform: z outside the convergence region");
    const double base = (1.0 - Sz) / (1.0 - s) * ((p + q) / Pz) * 0.5 *
                        (1.0 - std::sqrt(std::max(root_arg, 0.0)));
    return std::pow(base, y);
}

double catalan(int n) {
    if (n < 0) throw DomainError("catalan: n < 0");
    double c = 1.0;
    for (int k = 0; k < n; ++k) c = c * 2.0 * (2.0 * k + 1.0) / (k + 2.0);
    return c;
}

ExcursionLaw excursion_law(const FreeKernel& I, int nmax) {
    const double p = I.P.mass(), q = I.Q.mass(), p0 = I.P0.mass(), s0 = I.S0.mass();
    ExcursionLaw law;
    law.return_mass = 1.0 - I.kappa;
    law.up_count_masses.reserve(nmax);
    double c = 1.0;  // c_{n-1}, starting at c_0
    const double a = p / (p + q), b = q / (p + q);
    double apow = 1.0, bpow = b;
    for (int n = 1; n <= nmax; ++n) {
        if (n > 1) {
            c = c * 2.0 * (2.0 * (n - 2) + 1.0) / ((n - 2) + 2.0);  // c_{n-1}
            apow *= a;
            bpow *= b;
        }
        law.up_count_masses.push_back(c * p0 * apow * bpow);
    }
    // f_0 = s0 is the zero-up-step return; report it in position "n = 0" by
    // convention of the total mass only
    (void)s0;
    return law;
}

namespace {
int gcd0(int a, int b) { return std::gcd(a, b); }  // gcd(0, n) = n
}

AperiodicityReport aperiodicity_check(const FreeKernel& I) {
    AperiodicityReport rep;
    const double s = I.S.mass();
    rep.r_UD = (I.P * I.Q).period();
    rep.r_S = s > 0.0 ? I.S.period() : 0;
    if (s > 0.0) {
        rep.pass = gcd0(rep.r_UD, rep.r_S) == 1;
    } else {
        rep.pass = rep.r_UD == 0 || rep.r_UD == 1;
    }
    // Prop. 2: periods of S0 (if s0 > 0), S (if s > 0), P0 Q and P Q
    // relatively prime
    int g = 0;
    if (I.S0.mass() > 0.0) g = gcd0(g, I.S0.period());
    if (s > 0.0) g = gcd0(g, I.S.period());
    g = gcd0(g, (I.P0 * I.Q).period());
    g = gcd0(g, (I.P * I.Q).period());
    rep.F_period_ok = g == 1;
    return rep;
}

TailConstants tail_constants(const FreeKernel& I, const TwistedConstants& tc) {
    const double dp = d_plus(I);
    if (!(dp > 0.0)) throw HypothesisError("tail_constants: d+ <= 0");
    if (std::abs(tc.p - tc.q) > 1e-10)
        throw HypothesisError("tail_constants: p != q");
    const AperiodicityReport ap = aperiodicity_check(I);
    if (!ap.pass)
        throw HypothesisError("tail_constants: aperiodicity condition fails (r_UD = " +
                              std::to_string(ap.r_UD) + ", r_S = " + std::to_string(ap.r_S) +
                              ")");
    const double s = tc.s, p0 = tc.p0, kappa = I.kappa;
    TailConstants c;
    c.d_plus = dp;
    if (kappa > 0.0) {
        c.kind = TailConstants::Kind::Cplus;
        c.value = p0 / (kappa * kappa) * std::sqrt(dp / (2.0 * std::numbers::pi * (1.0 - s)));
        c.value_printed = c.value;
    } else {
        c.kind = TailConstants::Kind::Czero;
        c.value_printed = std::sqrt((1.0 - s) / (2.0 * std::numbers::pi * dp));
        c.value = c.value_printed / p0;
    }
    return c;
}

double asymptotic_greens(const TailConstants& c, double /*kappa*/, int l) {
    if (l < 1) throw DomainError("asymptotic_greens: l < 1");
    const double expo = c.kind == TailConstants::Kind::Cplus ? -1.5 : -0.5;
    return c.value * std::pow(static_cast<double>(l), expo);
}

}  // namespace qtail
