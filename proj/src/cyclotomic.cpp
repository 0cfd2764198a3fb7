#include "flateta/cyclotomic.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "flateta/errors.hpp"

namespace flateta {

namespace {

// Orders up to this bound are built once into a constant table.
constexpr std::uint64_t kTabulatedOrders = 256;

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// (x^n - 1) / prod, where prod is monic. The remainder must vanish.
IntPoly divide_xn_minus_one(std::uint64_t n, const IntPoly& prod) {
    IntPoly rem(n + 1, BigInt(0));
    rem[0] = -1;
    rem[n] = 1;
    const std::size_t dp = prod.size() - 1;
    IntPoly quot(n - dp + 1, BigInt(0));
    for (std::size_t i = n + 1; i-- > dp;) {
        BigInt c = rem[i];
        if (c.is_zero()) continue;
        quot[i - dp] = c;
        for (std::size_t j = 0; j <= dp; ++j) rem[i - dp + j] -= c * prod[j];
    }
    for (std::size_t i = 0; i < dp; ++i) {
        if (!rem[i].is_zero())
            throw InternalError("x^" + std::to_string(n) + " - 1 not divisible by proper cyclotomic factors");
    }
    return quot;
}

// Phi_n from the already-known Phi_d of every proper divisor d.
template <typename Lookup>
IntPoly phi_from_divisors(std::uint64_t n, Lookup&& lookup) {
    IntPoly prod{BigInt(1)};
    for (std::uint64_t d : divisors(n)) {
        if (d == n) break;
        prod = multiply(prod, lookup(d));
    }
    return divide_xn_minus_one(n, prod);
}

std::shared_ptr<const CyclotomicField> make_field(std::uint64_t order, IntPoly modulus) {
    auto f = std::make_shared<CyclotomicField>();
    f->order = order;
    f->degree = modulus.size() - 1;
    f->modulus = std::move(modulus);
    for (std::size_t j = 0; j < f->degree; ++j) {
        const BigInt& c = f->modulus[j];
        if (c.is_zero()) continue;
        if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
            throw InternalError("cyclotomic coefficient exceeds 64 bits");
        f->tail.emplace_back(j, static_cast<std::int64_t>(c));
    }
    return f;
}

const std::vector<std::shared_ptr<const CyclotomicField>>& field_table() {
    static const std::vector<std::shared_ptr<const CyclotomicField>> table = [] {
        std::vector<std::shared_ptr<const CyclotomicField>> t(kTabulatedOrders + 1);
        for (std::uint64_t n = 1; n <= kTabulatedOrders; ++n) {
            t[n] = make_field(n, phi_from_divisors(n, [&](std::uint64_t d) -> const IntPoly& {
                                  return t[d]->modulus;
                              }));
        }
        return t;
    }();
    return table;
}

// Integer numerators over one common denominator.
struct ScaledPoly {
    std::vector<BigInt> num;
    BigInt den;
};

ScaledPoly scale(std::span<const Rational> coeffs) {
    ScaledPoly s{{}, BigInt(1)};
    for (const auto& c : coeffs) {
        const BigInt& d = c.denominator();
        if (d != 1 && d != s.den) s.den = lcm(s.den, d);
    }
    s.num.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (c.is_zero())
            s.num.emplace_back(0);
        else if (c.denominator() == s.den)
            s.num.push_back(c.numerator());
        else
            s.num.push_back(c.numerator() * (s.den / c.denominator()));
    }
    return s;
}

void reduce_in_place(std::vector<BigInt>& p, const CyclotomicField& field) {
    const std::size_t d = field.degree;
    BigInt c, t;
    for (std::size_t i = p.size(); i-- > d;) {
        if (p[i].is_zero()) continue;
        c.swap(p[i]);
        p[i] = 0;
        for (const auto& [j, m] : field.tail) {
            if (m == 1) {
                p[i - d + j] -= c;
            } else if (m == -1) {
                p[i - d + j] += c;
            } else {
                t = c;
                t *= m;
                p[i - d + j] -= t;
            }
        }
    }
    p.resize(d, BigInt(0));
}

std::vector<Rational> unscale(const std::vector<BigInt>& num, const BigInt& den) {
    std::vector<Rational> out;
    out.reserve(num.size());
    for (const auto& n : num) out.emplace_back(n, den);
    return out;
}

std::vector<Rational> reduce(std::span<const Rational> coeffs, const CyclotomicField& field) {
    ScaledPoly s = scale(coeffs);
    reduce_in_place(s.num, field);
    return unscale(s.num, s.den);
}

// Integer polynomials for the extended Euclidean algorithm.
using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// c*a = q*b + r with deg r < deg b, for the power c of lc(b) built up below.
struct PseudoDivision {
    ZPoly quotient;
    ZPoly remainder;
    BigInt scale;
};

PseudoDivision pseudo_divmod(ZPoly r, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lead = b.back();
    PseudoDivision out{ZPoly(r.size() >= b.size() ? r.size() - db : 0, BigInt(0)), {}, BigInt(1)};
    while (r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const BigInt t = r.back();
        if (lead != 1) {
            out.scale *= lead;
            for (auto& x : out.quotient) x *= lead;
            for (auto& x : r) x *= lead;
        }
        out.quotient[shift] += t;
        for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= t * b[j];
        trim(r);
    }
    out.remainder = std::move(r);
    return out;
}

// c*s - q*t
ZPoly scaled_difference(const BigInt& c, const ZPoly& s, const ZPoly& q, const ZPoly& t) {
    std::size_t n = s.size();
    if (!q.empty() && !t.empty()) n = std::max(n, q.size() + t.size() - 1);
    ZPoly out(n, BigInt(0));
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = c * s[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].is_zero()) continue;
        for (std::size_t j = 0; j < t.size(); ++j) out[i + j] -= q[i] * t[j];
    }
    trim(out);
    return out;
}

// Divides r and s by the gcd of all their coefficients.
void remove_common_content(ZPoly& r, ZPoly& s) {
    BigInt g(0);
    for (const auto* p : {&r, &s}) {
        for (const auto& x : *p) {
            if (g == 1) break;
            if (!x.is_zero()) g = gcd(g, x);
        }
    }
    if (g.is_zero() || g == 1) return;
    for (auto& x : r) x /= g;
    for (auto& x : s) x /= g;
}

}  // namespace

std::uint64_t euler_totient(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic_polynomial(std::uint64_t n) {
    if (n == 0) throw DomainError("cyclotomic polynomial of order 0");
    std::map<std::uint64_t, IntPoly> known;
    for (std::uint64_t d : divisors(n)) {
        known[d] = phi_from_divisors(d, [&](std::uint64_t e) -> const IntPoly& { return known.at(e); });
    }
    return known.at(n);
}

std::shared_ptr<const CyclotomicField> cyclotomic_field(std::uint64_t order) {
    if (order == 0) throw DomainError("cyclotomic field of order 0");
    if (order <= kTabulatedOrders) return field_table()[order];
    return make_field(order, cyclotomic_polynomial(order));
}

CyclotomicElement::CyclotomicElement() : CyclotomicElement(cyclotomic_field(1), {Rational(0)}) {}

CyclotomicElement::CyclotomicElement(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> reduced)
    : field_(std::move(field)), coeffs_(std::move(reduced)) {}

CyclotomicElement::CyclotomicElement(std::uint64_t order, std::vector<Rational> coefficients)
    : field_(cyclotomic_field(order)) {
    coeffs_ = reduce(coefficients, *field_);
}

CyclotomicElement CyclotomicElement::constant(const Rational& value, std::uint64_t order) {
    auto field = cyclotomic_field(order);
    std::vector<Rational> c(field->degree);
    c[0] = value;
    return CyclotomicElement(std::move(field), std::move(c));
}

CyclotomicElement CyclotomicElement::zeta(std::uint64_t order, std::int64_t power) {
    if (order == 0) throw DomainError("cyclotomic field of order 0");
    const auto n = static_cast<std::int64_t>(order);
    const auto e = static_cast<std::size_t>(((power % n) + n) % n);
    auto field = cyclotomic_field(order);
    if (e < field->degree) {
        std::vector<Rational> c(field->degree);
        c[e] = 1;
        return CyclotomicElement(std::move(field), std::move(c));
    }
    std::vector<Rational> c(e + 1);
    c[e] = 1;
    return CyclotomicElement(order, std::move(c));
}

bool CyclotomicElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CyclotomicElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

CyclotomicElement CyclotomicElement::promote(std::uint64_t target_order) const {
    if (target_order == order()) return *this;
    if (target_order == 0 || target_order % order() != 0)
        throw DomainError("cannot embed Q(zeta_" + std::to_string(order()) + ") in Q(zeta_" +
                          std::to_string(target_order) + ")");
    auto target = cyclotomic_field(target_order);
    const std::uint64_t step = target_order / order();
    std::vector<Rational> spread((coeffs_.size() - 1) * step + 1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) spread[j * step] = coeffs_[j];
    return CyclotomicElement(target, reduce(spread, *target));
}

CyclotomicElement CyclotomicElement::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return CyclotomicElement(field_, std::move(c));
}

CyclotomicElement CyclotomicElement::inverse() const {
    if (is_zero()) throw DomainError("division by the zero element of Q(zeta_" + std::to_string(order()) + ")");
    // Extended Euclid on (Phi_N, D*a) over Z[x] with pseudo-division, tracking
    // only the cofactor of a: s_i * D*a = r_i (mod Phi_N). Each (r_i, s_i) pair
    // is divided by its common content.
    ScaledPoly a = scale(coeffs_);
    ZPoly r0(field_->modulus.begin(), field_->modulus.end());
    ZPoly r1 = std::move(a.num);
    trim(r1);
    ZPoly s0, s1{BigInt(1)};
    while (!r1.empty()) {
        PseudoDivision step = pseudo_divmod(r0, r1);
        ZPoly s = scaled_difference(step.scale, s0, step.quotient, s1);
        remove_common_content(step.remainder, s);
        r0 = std::move(r1);
        r1 = std::move(step.remainder);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw InternalError("non-unit gcd with an irreducible cyclotomic polynomial");
    // (D*a)^{-1} = s0 / g, so a^{-1} = D*s0 / g.
    std::vector<Rational> inv;
    inv.reserve(s0.size());
    for (const auto& x : s0) inv.emplace_back(x * a.den, r0[0]);
    return CyclotomicElement(field_, reduce(inv, *field_));
}

namespace {

std::uint64_t common_order(const CyclotomicElement& a, const CyclotomicElement& b) {
    return std::lcm(a.order(), b.order());
}

}  // namespace

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
    const auto n = common_order(a, b);
    if (a.order() != n || b.order() != n) return a.promote(n) + b.promote(n);
    std::vector<Rational> c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return CyclotomicElement(a.field_, std::move(c));
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) { return a + (-b); }

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
    const auto n = common_order(a, b);
    if (a.order() != n || b.order() != n) return a.promote(n) * b.promote(n);
    ScaledPoly sa = scale(a.coeffs_), sb = scale(b.coeffs_);
    std::vector<BigInt> prod(2 * a.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < sa.num.size(); ++i) {
        if (sa.num[i].is_zero()) continue;
        for (std::size_t j = 0; j < sb.num.size(); ++j) prod[i + j] += sa.num[i] * sb.num[j];
    }
    reduce_in_place(prod, *a.field_);
    return CyclotomicElement(a.field_, unscale(prod, sa.den * sb.den));
}

CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b) {
    const auto n = common_order(a, b);
    return a.promote(n) * b.promote(n).inverse();
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    const auto n = common_order(a, b);
    if (a.order() != n || b.order() != n) return a.promote(n) == b.promote(n);
    return a.coeffs_ == b.coeffs_;
}

std::string CyclotomicElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i];
        if (i > 0) os << "*z" << order() << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

CyclotomicElement cyclo_arith(const CyclotomicElement& a, const CyclotomicElement& b, CycloOp op) {
    switch (op) {
        case CycloOp::add: return a + b;
        case CycloOp::sub: return a - b;
        case CycloOp::mul: return a * b;
        case CycloOp::div: return a / b;
    }
    throw InternalError("unknown cyclotomic operation");
}

CyclotomicElement cot_exact(std::int64_t k, std::int64_t n) {
    if (n < 1) throw DomainError("cot(k*pi/n) needs n >= 1, got n = " + std::to_string(n));
    const std::int64_t r = ((k % n) + n) % n;
    if (r == 0)
        throw PoleError("cot(k*pi/n) has a pole at k = " + std::to_string(k) + ", n = " + std::to_string(n));
    // cot(t) = i (e^{2it} + 1) / (e^{2it} - 1) = i (1 + 2 / (e^{2it} - 1)), and
    // e^{2ik*pi/n} = zeta_n^k. The quotient lives in Q(zeta_n), so it is formed
    // there and then embedded.
    const auto order = static_cast<std::uint64_t>(n);
    const CyclotomicElement w = CyclotomicElement::zeta(order, r);
    const CyclotomicElement one = CyclotomicElement::constant(1, order);
    const CyclotomicElement quotient = one + CyclotomicElement::constant(2, order) / (w - one);
    const std::uint64_t m = std::lcm<std::uint64_t>(4, 2 * order);
    const CyclotomicElement i = CyclotomicElement::zeta(m, static_cast<std::int64_t>(m / 4));
    return i * quotient.promote(m);
}

Rational to_rational(const CyclotomicElement& c) {
    auto coeffs = c.coefficients();
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero())
            throw CertificationError(i, "element of Q(zeta_" + std::to_string(c.order()) +
                                            ") is not rational: coefficient " + std::to_string(i) + " is " +
                                            coeffs[i].str());
    }
    return coeffs.empty() ? Rational(0) : coeffs[0];
}

}  // namespace flateta
