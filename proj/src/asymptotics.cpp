#include "qtail/asymptotics.hpp"

#include <cmath>

#include "qtail/errors.hpp"

namespace qtail {

TailLaw analyze(const FreeKernel& k, double tol) {
    const KernelDiagnostics diag = validate(k);
    if (!diag.ok())
        throw HypothesisError("analyze: kernel fails validation: " + diag.violations.front());

    const TwistPoint tp = classify(k, tol);
    TailLaw law;
    law.regime = tp.regime;
    law.theta1 = tp.theta1;
    law.theta2 = tp.theta2;
    law.kappa = tp.kappa;

    TwistResult tw = twist(k, tp.theta1, tp.theta2);
    law.tc = tw.constants;
    law.d_plus = d_plus(tw.kernel);

    switch (tp.regime) {
        case Regime::Bridge: {
            law.poly_exponent = -1.5;
            const TailConstants c = tail_constants(tw.kernel, tw.constants);
            law.constant = c.value;
            law.boundary_ratio = law.tc.u / law.tc.p0;
            break;
        }
        case Regime::NullRecurrent: {
            law.poly_exponent = -0.5;
            tw.kernel.kappa = 0.0;  // classified as exactly null recurrent
            const TailConstants c = tail_constants(tw.kernel, tw.constants);
            law.constant = c.value;
            law.C0_printed = c.value_printed;
            break;
        }
        case Regime::Jitter: {
            law.poly_exponent = 0.0;
            if (!(law.tc.p < law.tc.q))
                throw HypothesisError("analyze: jitter point has p >= q");
            const PhaseMeasure phi = phase_stationary_measure(Regime::Jitter, law.tc);
            law.Gamma = phi.Gamma;
            const FreeKernel& J = tw.kernel;
            const double phi0 = phi(0);
            const double boundary_mean = J.S0.mean() + J.P0.mean();
            const double interior_mean = J.P.mean() + J.Q.mean() + J.S.mean();
            law.dtilde = phi0 * boundary_mean + (1.0 - phi0) * interior_mean;
            law.dtilde_printed =
                phi0 * boundary_mean +
                (1.0 - phi0) * (J.Q.mean() + J.S.mean() + J.P.mass());
            if (!(*law.dtilde > 0.0))
                throw HypothesisError("analyze: jitter drift dtilde <= 0");
            law.constant = 1.0 / *law.dtilde;
            break;
        }
    }
    return law;
}

double tail_profile(const TailLaw& law, int y) {
    if (y < 0) throw DomainError("tail_profile: y < 0");
    const double e = std::exp(-law.theta2 * y);
    switch (law.regime) {
        case Regime::Bridge:
            return e * (law.tc.p0 / law.tc.u) * (1.0 + law.kappa * y / law.tc.p0);
        case Regime::NullRecurrent:
            return e;
        case Regime::Jitter: {
            const PhaseMeasure phi = phase_stationary_measure(Regime::Jitter, law.tc);
            return e * phi(y);
        }
    }
    return 0.0;
}

double tail_profile_squared(const TailLaw& law, int y) {
    if (law.regime != Regime::Bridge) return tail_profile(law, y);
    const double a = 1.0 + law.kappa * y / law.tc.p0;
    return std::exp(-law.theta2 * y) * (law.tc.p0 / law.tc.u) * a * a;
}

void validity_checks(const FreeKernel& k, TailLaw& law, std::optional<double> rho2) {
    if (rho2) {
        const double cascade = *rho2 * std::exp(law.theta2);
        if (cascade >= 1.0)
            law.warnings.push_back(
                "cascade condition fails: rho2 e^{theta2} = " + std::to_string(cascade) +
                " >= 1; asymptotics unsupported");
    }
    if (!(law.d_plus > 0.0))
        law.warnings.push_back("twisted horizontal drift d+ <= 0");
    const TwistResult tw = twist(k, law.theta1, law.theta2);
    const AperiodicityReport ap = aperiodicity_check(tw.kernel);
    if (!ap.pass)
        law.warnings.push_back("aperiodicity condition fails (r_UD = " +
                               std::to_string(ap.r_UD) +
                               ", r_S = " + std::to_string(ap.r_S) + ")");
    if (law.regime == Regime::Jitter && !(law.tc.p < law.tc.q))
        law.warnings.push_back("jitter law returned with p >= q");
}

}  // namespace qtail
