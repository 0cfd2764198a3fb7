#include "flateta/seifert.hpp"

#include <numeric>

#include "flateta/errors.hpp"

namespace flateta {

std::string to_string(BaseSurface base) {
    switch (base) {
        case BaseSurface::S2: return "S2";
        case BaseSurface::T2: return "T2";
    }
    return "?";
}

const SeifertData& validate(const SeifertData& s) {
    const int expected_genus = s.base == BaseSurface::S2 ? 0 : 1;
    if (s.genus != expected_genus)
        throw ValidationError("genus", "genus " + std::to_string(s.genus) + " does not match base " +
                                           to_string(s.base) + " (expected " + std::to_string(expected_genus) + ")");
    for (std::size_t i = 0; i < s.fibers.size(); ++i) {
        const auto& f = s.fibers[i];
        const std::string field = "fibers[" + std::to_string(i) + "]";
        if (f.alpha < 2)
            throw ValidationError(field, field + ": multiplicity alpha = " + std::to_string(f.alpha) + " < 2");
        const auto g = std::gcd(f.alpha, f.beta);
        if (g != 1)
            throw ValidationError(field, field + ": gcd(" + std::to_string(f.alpha) + "," + std::to_string(f.beta) +
                                             ") = " + std::to_string(g) + " != 1");
    }
    return s;
}

Rational euler_number(const SeifertData& s) {
    Rational sum(s.b);
    for (const auto& f : s.fibers) sum += Rational(f.beta, f.alpha);
    return -sum;
}

Rational orbifold_euler_characteristic(const SeifertData& s) {
    Rational chi(2 - 2 * s.genus);
    for (const auto& f : s.fibers) chi -= Rational(1) - Rational(1, f.alpha);
    return chi;
}

bool is_flat(const SeifertData& s) {
    return euler_number(s).is_zero() && orbifold_euler_characteristic(s).is_zero();
}

namespace {

SeifertData over_sphere(std::vector<FiberPair> fibers) {
    SeifertData s{BaseSurface::S2, 0, 0, std::move(fibers)};
    validate(s);
    if (!is_flat(s)) throw InternalError("catalog Seifert data is not flat");
    return s;
}

}  // namespace

std::vector<CatalogEntry> flat_catalog() {
    SeifertData torus{BaseSurface::T2, 1, 0, {}};
    validate(torus);
    std::vector<CatalogEntry> c;
    c.push_back({"G1", "trivial", torus, Rational(0), true, "3-torus, circle bundle over T2"});
    c.push_back({"G2", "Z2", over_sphere({{2, 1}, {2, 1}, {2, -1}, {2, -1}}), Rational(0), true,
                 "base orbifold S2(2,2,2,2)"});
    c.push_back({"G3", "Z3", over_sphere({{3, 2}, {3, -1}, {3, -1}}), Rational(-2, 3), false,
                 "base orbifold S2(3,3,3)"});
    c.push_back({"G4", "Z4", over_sphere({{2, 1}, {4, -1}, {4, -1}}), Rational(-1), true,
                 "base orbifold S2(2,4,4)"});
    c.push_back({"G5", "Z6", over_sphere({{2, 1}, {3, -1}, {6, -1}}), Rational(-4, 3), false,
                 "base orbifold S2(2,3,6)"});
    c.push_back({"G6", "Z2xZ2", std::nullopt, std::nullopt, true,
                 "Hantzsche-Wendt manifold; its Seifert fibrations have non-orientable base, outside this model. "
                 "eta is not computed here. It is recorded as integral because G3 and G5 are the only "
                 "orientable flat types with non-integral eta; an older count of 'G5 and six other' "
                 "types overstates the total, which is six."});
    return c;
}

}  // namespace flateta
