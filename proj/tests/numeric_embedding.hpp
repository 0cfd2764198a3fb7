#pragma once

// Floating-point evaluation of cyclotomic elements at zeta_N = e^{2 pi i/N}.
// Test-only cross-check; the library itself never returns floating values.

#include <complex>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "flateta/cyclotomic.hpp"

namespace flateta::testing {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

template <typename Real>
Real to_real(const Rational& r) {
    return Real(r.numerator()) / Real(r.denominator());
}

template <>
inline double to_real<double>(const Rational& r) {
    return r.to_double();
}

/// Real and imaginary parts of c evaluated at e^{2 pi i/N}.
template <typename Real>
std::pair<Real, Real> embed(const CyclotomicElement& c) {
    using std::cos;
    using std::sin;
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    const auto coeffs = c.coefficients();
    Real re = 0, im = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        const Real angle = two_pi * Real(static_cast<long long>(j)) / Real(static_cast<long long>(c.order()));
        const Real k = to_real<Real>(coeffs[j]);
        re += k * cos(angle);
        im += k * sin(angle);
    }
    return {re, im};
}

inline std::complex<double> embed_double(const CyclotomicElement& c) {
    auto [re, im] = embed<double>(c);
    return {re, im};
}

}  // namespace flateta::testing
