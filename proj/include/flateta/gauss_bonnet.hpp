#pragma once

#include <cstdint>
#include <string>

#include "flateta/rational.hpp"

namespace flateta {

/// A volume written as coefficient * pi^2, with a 12-significant-digit
/// decimal rendering.
struct VolumeValue {
    Rational coefficient;
    std::string approx;

    double value() const;
};

/// Vol = (4 pi^2 / 3) chi for a finite-volume hyperbolic 4-manifold.
/// Throws DomainError for chi <= 0.
VolumeValue volume_from_chi(std::int64_t chi);

/// The unique integer chi >= 1 with |vol - (4 pi^2/3) chi| <= tolerance.
/// Throws DomainError on non-positive input, NoMatchError if no lattice point
/// is in range and AmbiguityError if several are.
std::int64_t chi_from_volume(double vol, double tolerance);

/// chi(DW) = 2 chi(W): the closed 3-dimensional boundary contributes nothing.
std::int64_t doubled_euler(std::int64_t chi_w);

/// 4 pi^2 / 3 rendered to 12 significant digits.
std::string lattice_spacing_text();

}  // namespace flateta
