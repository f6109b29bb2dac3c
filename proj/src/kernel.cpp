#include "qtail/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <nlohmann/json.hpp>

#include "qtail/errors.hpp"

namespace qtail {

KernelDiagnostics validate(const FreeKernel& k) {
    KernelDiagnostics d;
    d.interior_mass = k.P.mass() + k.Q.mass() + k.S.mass();
    d.boundary_mass = k.P0.mass() + k.S0.mass();
    d.kappa = k.kappa;
    d.min_dx = std::numeric_limits<int>::max();
    d.max_dx = std::numeric_limits<int>::min();
    for (const LaurentPoly* h : {&k.P, &k.Q, &k.S, &k.P0, &k.S0}) {
        if (h->empty()) continue;
        d.min_dx = std::min(d.min_dx, h->min_exponent());
        d.max_dx = std::max(d.max_dx, h->max_exponent());
    }
    if (d.min_dx > d.max_dx) d.min_dx = d.max_dx = 0;

    if (std::abs(d.interior_mass - 1.0) > 1e-12)
        d.violations.push_back("interior row mass " + std::to_string(d.interior_mass) +
                               " != 1");
    if (std::abs(d.boundary_mass - (1.0 - k.kappa)) > 1e-12)
        d.violations.push_back("boundary row mass " + std::to_string(d.boundary_mass) +
                               " != 1 - kappa");
    if (k.kappa < 0.0) d.violations.push_back("kappa < 0");
    if (k.kappa > 1e-12) d.violations.push_back("substochastic-boundary: kappa > 0");
    if (!(k.P.mass() > 0.0)) d.violations.push_back("P(1) = 0 (no up moves)");
    if (!(k.Q.mass() > 0.0)) d.violations.push_back("Q(1) = 0 (no down moves)");
    if (!(k.P0.mass() > 0.0)) d.violations.push_back("P0(1) = 0 (boundary absorbs)");
    return d;
}

double r_plus(const FreeKernel& k, double theta1, double theta2) {
    const double z = std::exp(theta1);
    return std::exp(theta2) * k.P.eval(z) + k.S.eval(z) + std::exp(-theta2) * k.Q.eval(z);
}

double r_minus(const FreeKernel& k, double theta1, double theta2) {
    const double z = std::exp(theta1);
    return std::exp(theta2) * k.P0.eval(z) + k.S0.eval(z);
}

TwistResult twist(const FreeKernel& k, double theta1, double theta2) {
    const double z0 = std::exp(theta1);
    const double f = r_plus(k, theta1, theta2);
    if (!std::isfinite(f) || f <= 0.0)
        throw HypothesisError("twist: R+ not finite/positive");
    const double et2 = std::exp(theta2);

    auto tilt = [&](const LaurentPoly& h, double pref) {
        std::map<int, double> out;
        for (const auto& [e, w] : h.terms()) out[e] = w * pref * std::pow(z0, e) / f;
        return LaurentPoly(out);
    };

    TwistResult r;
    r.kernel.P = tilt(k.P, et2);
    r.kernel.Q = tilt(k.Q, 1.0 / et2);
    r.kernel.S = tilt(k.S, 1.0);
    r.kernel.P0 = tilt(k.P0, et2);
    r.kernel.S0 = tilt(k.S0, 1.0);
    r.kernel.kappa = 1.0 - r_minus(k, theta1, theta2) / f;

    TwistedConstants& c = r.constants;
    c.p = r.kernel.P.mass();
    c.q = r.kernel.Q.mass();
    c.s = r.kernel.S.mass();
    c.p0 = r.kernel.P0.mass();
    c.s0 = r.kernel.S0.mass();
    c.u = std::min(c.p, c.q);
    c.kappa = r.kernel.kappa;
    c.f = f;
    return r;
}

double HarmonicFunction::hhat(double y) const {
    return std::exp(beta * y) * (1.0 + a0_slope * y);
}

double BridgeChain::up(int y) const {
    if (y == 0) return p0 * a0(1);  // = p0 + kappa
    return u * a0(y + 1) / a0(y);
}

double BridgeChain::down(int y) const {
    if (y == 0) return 0.0;
    return u * a0(y - 1) / a0(y);
}

double BridgeChain::stay(int y) const { return y == 0 ? s0 : s; }

BridgeChain h_transform_bridge(const FreeKernel& I, const TwistedConstants& tc) {
    if (!(tc.u > 0.0)) throw HypothesisError("h_transform_bridge: degenerate kernel (u = 0)");
    if (std::abs(tc.p - tc.q) > 1e-10)
        throw HypothesisError("h_transform_bridge: not a bridge twist (p != q)");
    BridgeChain c;
    c.u = tc.u;
    c.s = tc.s;
    c.p0 = tc.p0;
    c.s0 = tc.s0;
    c.kappa = I.kappa;
    return c;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Bridge: return "bridge";
        case Regime::NullRecurrent: return "null-recurrent";
        case Regime::Jitter: return "jitter";
    }
    return "?";
}

double PhaseMeasure::operator()(int y) const {
    if (kind == Kind::BridgeSigmaFinite) {
        if (y == 0) return 1.0;
        const double a = 1.0 + kappa * y / p0;
        return (p0 / u) * a * a;
    }
    if (y == 0) return Gamma * p / p0;
    return Gamma * std::pow(p / q, y);
}

PhaseMeasure phase_stationary_measure(Regime regime, const TwistedConstants& tc) {
    PhaseMeasure m;
    m.p = tc.p;
    m.q = tc.q;
    m.p0 = tc.p0;
    m.u = tc.u;
    m.kappa = tc.kappa;
    if (regime == Regime::Jitter) {
        if (!(tc.p < tc.q))
            throw HypothesisError("phase_stationary_measure: jitter requires p < q");
        m.kind = PhaseMeasure::Kind::JitterProbability;
        m.Gamma = 1.0 / (tc.p / tc.p0 + tc.p / (tc.q - tc.p));
    } else {
        m.kind = PhaseMeasure::Kind::BridgeSigmaFinite;
    }
    return m;
}

double transience_sum(double p0, double kappa) {
    if (!(p0 > 0.0) || kappa < 0.0) throw DomainError("transience_sum: need p0 > 0, kappa >= 0");
    if (kappa == 0.0) return std::numeric_limits<double>::infinity();
    // partial sums telescope: sum_{n=1..N} = p0 (p0+kappa) / kappa
    //   * (1/(p0+kappa) - 1/(p0+kappa(N+1))) -> p0/kappa
    return p0 / kappa;
}

LaurentPoly parse_laurent(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw ConfigError("transform map: expected JSON object");
    std::map<int, double> coeffs;
    for (auto it = j.begin(); it != j.end(); ++it) {
        size_t pos = 0;
        int e;
        try {
            e = std::stoi(it.key(), &pos);
        } catch (const std::exception&) {
            throw ConfigError("transform map: bad exponent key '" + it.key() + "'");
        }
        if (pos != it.key().size())
            throw ConfigError("transform map: bad exponent key '" + it.key() + "'");
        if (!it.value().is_number())
            throw ConfigError("transform map: non-numeric value at exponent " + it.key());
        const double w = it.value().get<double>();
        if (w < 0.0)
            throw ConfigError("transform map: negative coefficient at exponent " + it.key());
        coeffs[e] += w;
    }
    return LaurentPoly(coeffs);
}

}  // namespace qtail
