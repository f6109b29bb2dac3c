#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace qtail {

// Finite-support Laurent polynomial with nonnegative real coefficients,
// indexed by integer displacement. Immutable after construction; weights
// below kDropThreshold are dropped so support queries are not polluted by
// float dust.
class LaurentPoly {
  public:
    static constexpr double kDropThreshold = 1e-15;

    LaurentPoly() = default;
    explicit LaurentPoly(const std::map<int, double>& coeffs);
    LaurentPoly(std::initializer_list<std::pair<int, double>> coeffs);

    // Coefficient at exponent e (0 if absent).
    double coeff(int e) const;

    bool empty() const { return terms_.empty(); }
    int min_exponent() const;  // requires non-empty
    int max_exponent() const;

    // Sum_x h(x) z^x. Throws DomainError for z = 0.
    std::complex<double> eval(std::complex<double> z) const;
    double eval(double z) const;

    // d/dz at real z.
    double derivative(double z) const;

    // (mass, mean) = (H(1), H'(1)), exact finite sums.
    std::pair<double, double> moments() const;
    double mass() const;
    double mean() const;

    // gcd of |nonzero support exponents|; 0 when support is empty or {0}.
    int period() const;

    // z -> cz tilt: coefficient h(x) -> h(x) c^x. Requires c > 0.
    LaurentPoly scale_argument(double c) const;

    // Convolution (product of transforms).
    LaurentPoly operator*(const LaurentPoly& other) const;

    const std::vector<std::pair<int, double>>& terms() const { return terms_; }

  private:
    // sorted by exponent
    std::vector<std::pair<int, double>> terms_;
};

}  // namespace qtail
