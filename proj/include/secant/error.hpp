#pragma once

#include <stdexcept>
#include <string>

namespace secant {

/// Two ambient classes (or series over them) built for different curve degrees.
class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input outside the domain an operation is defined on (d < 8, index out of
/// range, non-unit constant term, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A quantity that must be an integer (a degree, a rank) came out fractional.
class IntegralityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Internal consistency check failed: two routes to the same class disagree,
/// or a class has the wrong grading.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require_curve_degree(int d)
{
    if (d < 8)
        throw DomainError("curve degree d = " + std::to_string(d) +
                          " is unsupported: the secant degree computation needs d >= 8 "
                          "(for d = 6, 7 the third secant variety fills P^(d-2))");
}

} // namespace secant
