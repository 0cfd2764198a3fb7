#include "flateta/eta.hpp"

#include "flateta/dedekind.hpp"
#include "flateta/errors.hpp"

namespace flateta {

EtaResult eta_flat(const SeifertData& s) {
    validate(s);
    const Rational e = euler_number(s);
    const Rational chi = orbifold_euler_characteristic(s);
    if (!e.is_zero() || !chi.is_zero()) {
        std::string msg = "not flat:";
        if (!e.is_zero()) msg += " e = " + e.str();
        if (!e.is_zero() && !chi.is_zero()) msg += ",";
        if (!chi.is_zero()) msg += " chi_orb = " + chi.str();
        throw NotFlatError(!e.is_zero(), !chi.is_zero(), msg);
    }

    EtaResult result;
    Rational sum;
    for (const auto& f : s.fibers) {
        Rational c = dedekind_cot(f.beta, f.alpha);
        sum += c;
        result.fiber_contributions.emplace_back(f, std::move(c));
    }
    result.value = Rational(4) * sum;
    result.integral = is_integral(result.value);
    return result;
}

bool is_integral(const Rational& r) { return r.is_integer(); }

std::int64_t predicted_signature(const Rational& eta) {
    if (!is_integral(eta))
        throw ObstructionError("eta = " + eta.str() +
                               " is not an integer: no hyperbolic 4-manifold has this boundary, so no signature");
    return static_cast<std::int64_t>(-eta.numerator());
}

ObstructionReport obstruction_report(const SeifertData& s) {
    ObstructionReport r;
    r.eta = eta_flat(s);
    const bool obstructed = !r.eta.integral;
    r.geodesic_boundary_obstructed = obstructed;
    r.one_cusped_cross_section_obstructed = obstructed;
    if (!obstructed) r.predicted_signature = predicted_signature(r.eta.value);
    r.pontryagin_term = Rational(0);
    r.notes.push_back(obstructed
                          ? "eta is not an integer: M is not the totally geodesic boundary of a hyperbolic 4-manifold"
                          : "eta is an integer: no obstruction to bounding geometrically");
    r.notes.push_back(obstructed
                          ? "M is not the cusp cross-section of any one-cusped finite-volume hyperbolic 4-manifold"
                          : "no obstruction to M being the cusp cross-section of a one-cusped hyperbolic 4-manifold");
    r.notes.push_back("cross-sections of multi-cusped hyperbolic 4-manifolds are not obstructed by eta");
    r.notes.push_back("the p1 integral vanishes on conformally flat fillers and is carried as 0; sign(W) = -eta(M)");
    return r;
}

}  // namespace flateta
