#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace flateta {

// Precondition violated: zero denominator, non-coprime pair, non-flat
// Seifert data, non-positive Euler characteristic, ...
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// cot(k*pi/n) requested with k = 0 (mod n).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// A cyclotomic element expected to be rational is not.
class CertificationError : public std::runtime_error {
public:
    CertificationError(std::size_t index, const std::string& what)
        : std::runtime_error(what), index_(index) {}

    // Index of the first nonzero coefficient beyond the constant term.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Seifert data violates an invariant; field() names the offender
// ("base", "genus", "fibers[2]", ...).
class ValidationError : public DomainError {
public:
    ValidationError(std::string field, const std::string& what)
        : DomainError(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// eta_flat / obstruction_report on Seifert data that is not Euclidean.
class NotFlatError : public DomainError {
public:
    NotFlatError(bool euler_failed, bool orbifold_failed, const std::string& what)
        : DomainError(what), euler_failed_(euler_failed), orbifold_failed_(orbifold_failed) {}

    bool euler_number_nonzero() const noexcept { return euler_failed_; }
    bool orbifold_characteristic_nonzero() const noexcept { return orbifold_failed_; }

private:
    bool euler_failed_;
    bool orbifold_failed_;
};

// A signature was requested for a manifold whose eta is not an integer:
// no hyperbolic filler exists.
class ObstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// chi_from_volume found no lattice point within tolerance.
class NoMatchError : public DomainError {
public:
    using DomainError::DomainError;
};

// chi_from_volume found more than one lattice point within tolerance.
class AmbiguityError : public DomainError {
public:
    using DomainError::DomainError;
};

// Descriptor text is malformed. offset() is the byte offset of the
// offending character in the raw input.
class SyntaxError : public std::invalid_argument {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : std::invalid_argument(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Broken internal invariant; never a valid state.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace flateta
