#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flateta/rational.hpp"

namespace flateta {

/// Exceptional fiber of multiplicity alpha >= 2 with Seifert coefficient beta,
/// gcd(alpha, beta) = 1.
struct FiberPair {
    std::int64_t alpha;
    std::int64_t beta;

    friend bool operator==(const FiberPair&, const FiberPair&) = default;
};

enum class BaseSurface { S2, T2 };

std::string to_string(BaseSurface base);

/// Seifert invariants over an orientable base: base surface, its genus,
/// the integral obstruction b and the exceptional fibers.
struct SeifertData {
    BaseSurface base = BaseSurface::S2;
    int genus = 0;
    std::int64_t b = 0;
    std::vector<FiberPair> fibers;

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

/// Returns s unchanged, or throws ValidationError naming the bad field.
const SeifertData& validate(const SeifertData& s);

/// e = -(b + sum beta_i/alpha_i).
Rational euler_number(const SeifertData& s);

/// chi_orb = 2 - 2 genus - sum (1 - 1/alpha_i).
Rational orbifold_euler_characteristic(const SeifertData& s);

/// Euclidean geometry: e = 0 and chi_orb = 0.
bool is_flat(const SeifertData& s);

struct CatalogEntry {
    std::string name;
    std::string holonomy;
    std::optional<SeifertData> seifert;
    std::optional<Rational> eta;
    bool eta_integral = true;
    std::string note;
};

/// The six closed orientable flat 3-manifolds G1..G6.
std::vector<CatalogEntry> flat_catalog();

}  // namespace flateta
