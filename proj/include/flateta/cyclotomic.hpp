#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "flateta/rational.hpp"

namespace flateta {

/// Integer polynomial, coefficients from the constant term upward.
using IntPoly = std::vector<BigInt>;

std::uint64_t euler_totient(std::uint64_t n);

/// The n-th cyclotomic polynomial, obtained by exact division of x^n - 1 by
/// the product of Phi_d over the proper divisors d of n.
/// Throws DomainError for n = 0 and InternalError if a division leaves a
/// remainder.
IntPoly cyclotomic_polynomial(std::uint64_t n);

/// Q(zeta_N) presented as Q[x] / Phi_N(x). Shared immutably by every element
/// of that order.
struct CyclotomicField {
    std::uint64_t order;
    std::size_t degree;  // Euler totient of order
    IntPoly modulus;     // Phi_order, monic, length degree + 1
    // Nonzero coefficients of modulus below the leading term, as (power, coefficient).
    std::vector<std::pair<std::size_t, std::int64_t>> tail;
};

std::shared_ptr<const CyclotomicField> cyclotomic_field(std::uint64_t order);

/// Element of Q(zeta_N), stored as the coefficient vector of its unique
/// representative of degree < phi(N) modulo Phi_N.
class CyclotomicElement {
public:
    /// The zero element of Q(zeta_1) = Q.
    CyclotomicElement();

    /// Takes coefficients of a polynomial in zeta_N of any length and reduces
    /// it modulo Phi_N.
    CyclotomicElement(std::uint64_t order, std::vector<Rational> coefficients);

    static CyclotomicElement constant(const Rational& value, std::uint64_t order = 1);
    /// zeta_N^power, any integer power.
    static CyclotomicElement zeta(std::uint64_t order, std::int64_t power = 1);

    std::uint64_t order() const noexcept { return field_->order; }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// True iff every coefficient past the constant term vanishes.
    bool is_rational() const;

    /// Re-expresses the element in Q(zeta_M) via zeta_N -> zeta_M^(M/N).
    /// Throws DomainError unless order() divides M.
    CyclotomicElement promote(std::uint64_t target_order) const;

    CyclotomicElement operator-() const;
    CyclotomicElement inverse() const;  // throws DomainError on zero

    friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b);

    /// Equal as field elements (after promotion to a common order).
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

    std::string str() const;

private:
    CyclotomicElement(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> reduced);

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coeffs_;
};

enum class CycloOp { add, sub, mul, div };

/// Combines a and b in Q(zeta_lcm(Na, Nb)).
CyclotomicElement cyclo_arith(const CyclotomicElement& a, const CyclotomicElement& b, CycloOp op);

/// Exact cot(k*pi/n) in Q(zeta_M), M = lcm(4, 2n). Throws PoleError when
/// n divides k and DomainError when n < 1.
CyclotomicElement cot_exact(std::int64_t k, std::int64_t n);

/// The rational value of c. Throws CertificationError carrying the index of
/// the first nonzero non-constant coefficient otherwise.
Rational to_rational(const CyclotomicElement& c);

}  // namespace flateta
