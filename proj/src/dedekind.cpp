#include "flateta/dedekind.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "flateta/cyclotomic.hpp"
#include "flateta/errors.hpp"

namespace flateta {

namespace {

void require_coprime(std::int64_t beta, std::int64_t alpha) {
    if (alpha < 1) throw DomainError("Dedekind sum needs alpha >= 1, got " + std::to_string(alpha));
    if (std::gcd(beta, alpha) != 1)
        throw DomainError("Dedekind sum needs gcd(alpha, beta) = 1, got gcd(" + std::to_string(alpha) + "," +
                          std::to_string(beta) + ") = " + std::to_string(std::gcd(beta, alpha)));
}

}  // namespace

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x - Rational(x.floor()) - Rational(1, 2);
}

Rational dedekind_sawtooth(std::int64_t beta, std::int64_t alpha) {
    require_coprime(beta, alpha);
    Rational sum;
    for (std::int64_t k = 1; k < alpha; ++k) {
        sum += sawtooth(Rational(k, alpha)) * sawtooth(Rational(BigInt(k) * beta, alpha));
    }
    return sum;
}

Rational dedekind_cot(std::int64_t beta, std::int64_t alpha) {
    require_coprime(beta, alpha);
    if (alpha == 1) return Rational(0);

    // cot(k*beta*pi/alpha) = cot(((k*beta) mod alpha) * pi/alpha), so one table
    // of alpha - 1 cotangents serves both factors.
    std::vector<CyclotomicElement> cot;
    cot.reserve(static_cast<std::size_t>(alpha));
    cot.emplace_back();
    for (std::int64_t k = 1; k < alpha; ++k) cot.push_back(cot_exact(k, alpha));

    const std::int64_t b = ((beta % alpha) + alpha) % alpha;
    CyclotomicElement sum = CyclotomicElement::constant(0, cot[1].order());
    for (std::int64_t k = 1; k < alpha; ++k) {
        const auto j = static_cast<std::size_t>((k * b) % alpha);
        sum = cyclo_arith(sum, cyclo_arith(cot[j], cot[static_cast<std::size_t>(k)], CycloOp::mul), CycloOp::add);
    }

    Rational total;
    try {
        total = to_rational(sum);
    } catch (const CertificationError& e) {
        throw InternalError(std::string("cotangent Dedekind sum failed rationality certification: ") + e.what());
    }
    return total / Rational(4 * alpha);
}

}  // namespace flateta
