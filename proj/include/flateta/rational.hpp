#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace flateta {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number p/q with arbitrary-precision numerator and
/// denominator.
///
/// Always stored reduced with a positive denominator, so zero is 0/1 and the
/// sign lives on the numerator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t n) : num_(n), den_(1) {}       // NOLINT(implicit)
    Rational(int n) : num_(n), den_(1) {}                // NOLINT(implicit)

    /// Throws DomainError on a zero denominator.
    Rational(BigInt n, BigInt d);

    /// Parses "p", "p/q", "-p/q". Throws std::invalid_argument on malformed
    /// text and DomainError on q = 0.
    static Rational parse(std::string_view text);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    /// Greatest integer <= *this.
    BigInt floor() const;

    Rational operator-() const;
    Rational reciprocal() const;  // throws DomainError on zero

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q" always, e.g. "2/1", "0/1", "-4/3". Used for structured output.
    std::string fraction_string() const;
    /// "p" for integers, otherwise "p/q".
    std::string str() const;

    /// Nearest double; for rendering only.
    double to_double() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

/// Builds the reduced fraction p/q. Throws DomainError if q = 0.
Rational rational_normalize(const BigInt& p, const BigInt& q);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace flateta
