#include "flateta/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "flateta/errors.hpp"

namespace flateta {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DomainError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> BigInt {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        BigInt v(std::string(s.substr(i)));
        return s[0] == '-' ? BigInt(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    auto den = text.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+'))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), parse_int(den));
}

BigInt Rational::floor() const {
    // C++ integer division truncates toward zero.
    BigInt q = num_ / den_;
    if (num_.sign() < 0 && q * den_ != num_) --q;
    return q;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    return Rational(den_, num_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ -= rhs.num_;
    } else {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::fraction_string() const {
    return num_.str() + "/" + den_.str();
}

std::string Rational::str() const {
    return is_integer() ? num_.str() : fraction_string();
}

double Rational::to_double() const {
    using boost::multiprecision::cpp_rational;
    return cpp_rational(num_, den_).convert_to<double>();
}

Rational rational_normalize(const BigInt& p, const BigInt& q) { return Rational(p, q); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace flateta
