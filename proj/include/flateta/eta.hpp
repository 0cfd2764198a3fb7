#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flateta/rational.hpp"
#include "flateta/seifert.hpp"

namespace flateta {

/// eta-invariant of a flat Seifert manifold. value = 4 * sum of the per-fiber
/// Dedekind sums listed in fiber_contributions.
struct EtaResult {
    Rational value;
    bool integral = true;
    std::vector<std::pair<FiberPair, Rational>> fiber_contributions;
};

/// Verdicts of the integrality obstructions. Both flags are !eta.integral.
///
/// The cusp verdict covers one-cusped fillers only: cross-sections of
/// hyperbolic 4-manifolds with several cusps are never obstructed by eta.
struct ObstructionReport {
    EtaResult eta;
    bool geodesic_boundary_obstructed = false;
    bool one_cusped_cross_section_obstructed = false;
    std::optional<std::int64_t> predicted_signature;
    // Integral of p1 over a hyperbolic filler. Identically zero (conformal
    // flatness), carried as a constant rather than computed.
    Rational pontryagin_term;
    std::vector<std::string> notes;
};

/// eta(M) = 4 * sum_i s(beta_i, alpha_i). Throws ValidationError on invalid
/// data and NotFlatError if e != 0 or chi_orb != 0.
EtaResult eta_flat(const SeifertData& s);

bool is_integral(const Rational& r);

/// Signature of any hyperbolic W with totally geodesic boundary M: -eta.
/// Throws ObstructionError if eta is not an integer.
std::int64_t predicted_signature(const Rational& eta);

ObstructionReport obstruction_report(const SeifertData& s);

}  // namespace flateta
