// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace rabi {

// Invalid or out-of-range input (non-finite frequencies, negative truncation, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested quantity is only defined in the normal phase; the spectral gap
// squared A(A+4C) is negative for the given parameters.
struct SuperradiantRegime : DomainError {
    using DomainError::DomainError;
};

// Parameters sit exactly on the phase boundary, where the Bogoliubov angle diverges.
struct BoundaryDegenerate : DomainError {
    using DomainError::DomainError;
};

// Coupling below the critical value: the bifurcation roots are complex.
struct NoRealTransition : DomainError {
    using DomainError::DomainError;
};

// An iterative procedure hit its iteration cap.
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rabi
