#pragma once

#include <stdexcept>
#include <string>

namespace sl3cv {

// Input/precondition failures. The CLI maps these to exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OffSurfaceError : ValidationError {
    using ValidationError::ValidationError;
};

// An inverse-character branch would need a scalar outside the rationals.
struct NotInFieldError : ValidationError {
    using ValidationError::ValidationError;
};

struct SingularParameterError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnsupportedJordanTypeError : ValidationError {
    using ValidationError::ValidationError;
};

struct ReducibleError : ValidationError {
    using ValidationError::ValidationError;
};

struct DivisibilityError : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidDomainError : ValidationError {
    using ValidationError::ValidationError;
};

// Newton failed to reach tolerance. The CLI maps this to exit code 2.
struct NonConvergenceError : std::runtime_error {
    NonConvergenceError(const std::string& what, double residual, int iters)
        : std::runtime_error(what), residual(residual), iters(iters) {}
    double residual;
    int iters;
};

}  // namespace sl3cv
