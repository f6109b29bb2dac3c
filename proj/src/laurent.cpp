#include "qtail/laurent.hpp"

#include <cmath>
#include <numeric>

#include "qtail/errors.hpp"

namespace qtail {

namespace {
std::vector<std::pair<int, double>> build(const std::map<int, double>& coeffs) {
    std::vector<std::pair<int, double>> terms;
    terms.reserve(coeffs.size());
    for (const auto& [e, w] : coeffs) {
        if (w < 0.0)
            throw DomainError("LaurentPoly: negative coefficient at exponent " +
                              std::to_string(e));
        if (w >= LaurentPoly::kDropThreshold) terms.emplace_back(e, w);
    }
    return terms;
}
}  // namespace

LaurentPoly::LaurentPoly(const std::map<int, double>& coeffs) : terms_(build(coeffs)) {}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, double>> coeffs)
    : terms_(build(std::map<int, double>(coeffs.begin(), coeffs.end()))) {}

double LaurentPoly::coeff(int e) const {
    for (const auto& [x, w] : terms_)
        if (x == e) return w;
    return 0.0;
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw DomainError("LaurentPoly: empty support");
    return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw DomainError("LaurentPoly: empty support");
    return terms_.back().first;
}

std::complex<double> LaurentPoly::eval(std::complex<double> z) const {
    if (z == std::complex<double>(0.0, 0.0))
        throw DomainError("LaurentPoly::eval: z = 0");
    std::complex<double> acc = 0.0;
    for (const auto& [e, w] : terms_) acc += w * std::pow(z, e);
    return acc;
}

double LaurentPoly::eval(double z) const {
    if (z == 0.0) throw DomainError("LaurentPoly::eval: z = 0");
    double acc = 0.0;
    for (const auto& [e, w] : terms_) acc += w * std::pow(z, e);
    return acc;
}

double LaurentPoly::derivative(double z) const {
    if (z == 0.0) throw DomainError("LaurentPoly::derivative: z = 0");
    double acc = 0.0;
    for (const auto& [e, w] : terms_) acc += w * e * std::pow(z, e - 1);
    return acc;
}

std::pair<double, double> LaurentPoly::moments() const {
    double m0 = 0.0, m1 = 0.0;
    for (const auto& [e, w] : terms_) {
        m0 += w;
        m1 += e * w;
    }
    return {m0, m1};
}

double LaurentPoly::mass() const { return moments().first; }
double LaurentPoly::mean() const { return moments().second; }

int LaurentPoly::period() const {
    int g = 0;
    for (const auto& [e, w] : terms_) g = std::gcd(g, std::abs(e));
    return g;
}

LaurentPoly LaurentPoly::scale_argument(double c) const {
    if (!(c > 0.0)) throw DomainError("scale_argument: c must be > 0");
    std::map<int, double> out;
    for (const auto& [e, w] : terms_) out[e] = w * std::pow(c, e);
    return LaurentPoly(out);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    std::map<int, double> out;
    for (const auto& [e1, w1] : terms_)
        for (const auto& [e2, w2] : other.terms_) out[e1 + e2] += w1 * w2;
    return LaurentPoly(out);
}

}  // namespace qtail
