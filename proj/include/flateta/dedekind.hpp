#pragma once

#include <cstdint>

#include "flateta/rational.hpp"

namespace flateta {

/// Sawtooth function ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

/// s(beta, alpha) = sum_{k=1}^{alpha-1} ((k/alpha)) ((k*beta/alpha)).
/// Throws DomainError unless alpha >= 1 and gcd(alpha, beta) = 1.
Rational dedekind_sawtooth(std::int64_t beta, std::int64_t alpha);

/// s(beta, alpha) = 1/(4 alpha) sum_{k=1}^{alpha-1} cot(k pi beta/alpha) cot(k pi/alpha),
/// evaluated in Q(zeta_M) with exact cotangents and certified rational.
/// Agrees with dedekind_sawtooth on every valid input.
Rational dedekind_cot(std::int64_t beta, std::int64_t alpha);

}  // namespace flateta
