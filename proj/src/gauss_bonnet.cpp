#include "flateta/gauss_bonnet.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "flateta/errors.hpp"

namespace flateta {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

std::string render(const Rational& coefficient_of_pi_squared) {
    const Decimal pi = boost::math::constants::pi<Decimal>();
    Decimal v = Decimal(coefficient_of_pi_squared.numerator()) / Decimal(coefficient_of_pi_squared.denominator());
    v *= pi * pi;
    return v.str(12, std::ios_base::fmtflags(0));
}

constexpr double kSpacing = 4.0 * std::numbers::pi * std::numbers::pi / 3.0;

}  // namespace

double VolumeValue::value() const { return std::stod(approx); }

VolumeValue volume_from_chi(std::int64_t chi) {
    if (chi <= 0)
        throw DomainError("volume needs chi >= 1, got " + std::to_string(chi) +
                          " (no finite-volume hyperbolic 4-manifold has chi <= 0)");
    Rational coefficient = Rational(4, 3) * Rational(chi);
    return {coefficient, render(coefficient)};
}

std::string lattice_spacing_text() { return "4*pi^2/3 ~ " + render(Rational(4, 3)); }

std::int64_t chi_from_volume(double vol, double tolerance) {
    if (!(vol > 0) || !std::isfinite(vol)) throw DomainError("volume must be positive and finite");
    if (!(tolerance > 0) || !std::isfinite(tolerance)) throw DomainError("tolerance must be positive and finite");
    const double lo = std::max(1.0, std::ceil((vol - tolerance) / kSpacing));
    const double hi = std::floor((vol + tolerance) / kSpacing);
    // Boundary candidates are re-checked directly against the tolerance.
    auto within = [&](double chi) { return std::abs(vol - kSpacing * chi) <= tolerance; };
    double first = lo, last = hi;
    if (first <= last && !within(first)) first += 1;
    if (first <= last && !within(last)) last -= 1;
    if (first > last)
        throw NoMatchError("no Euler characteristic within " + std::to_string(tolerance) + " of volume " +
                           std::to_string(vol) + "; volumes lie on the lattice " + lattice_spacing_text() + " * chi");
    if (first < last)
        throw AmbiguityError("tolerance " + std::to_string(tolerance) + " admits chi = " +
                             std::to_string(static_cast<std::int64_t>(first)) + " and " +
                             std::to_string(static_cast<std::int64_t>(first) + 1) + "; lattice spacing is " +
                             lattice_spacing_text());
    return static_cast<std::int64_t>(first);
}

std::int64_t doubled_euler(std::int64_t chi_w) { return 2 * chi_w; }

}  // namespace flateta
