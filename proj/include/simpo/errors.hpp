#pragma once

#include <stdexcept>
#include <string>

namespace simpo {

// Input violated a documented precondition (shape mismatch, bad domain, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal invariant failed (e.g. negative discriminant in a closed-form solve).
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// The weighted-posterior denominator of the closed-form velocity is (near) zero.
class SingularityError : public std::runtime_error {
public:
    SingularityError(const std::string& what, double denominator)
        : std::runtime_error(what), denominator(denominator) {}
    double denominator;
};

} // namespace simpo
