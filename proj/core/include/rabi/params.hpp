// params.hpp — Parameter sets for the modified Jaynes-Cummings and Rabi models

#pragma once

#include <cmath>

#include "rabi/errors.hpp"

namespace rabi {

namespace detail {
inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite value");
}
} // namespace detail

// Modified Jaynes-Cummings model: cavity mode omega_c, atomic splitting
// omega_a = omega_2 - omega_1, Rabi frequency Omega, squeeze parameter r,
// and the unitary-transformation parameter v. Only phi = 0 is supported,
// which keeps every matrix real.
struct ModelParams {
    double omega_c{1.0};
    double omega_a{0.0};
    double Omega{0.0};
    double r{0.0};
    double phi{0.0};   // fixed; nonzero values are rejected
    double v{0.0};
    double hbar{1.0};

    void validate() const {
        detail::require_finite(omega_c, "omega_c");
        detail::require_finite(omega_a, "omega_a");
        detail::require_finite(Omega, "Omega");
        detail::require_finite(r, "r");
        detail::require_finite(v, "v");
        detail::require_finite(hbar, "hbar");
        if (omega_c <= 0) throw DomainError("omega_c must be > 0");
        if (omega_a < 0) throw DomainError("omega_a must be >= 0");
        if (Omega < 0) throw DomainError("Omega must be >= 0");
        if (r < 0) throw DomainError("squeeze parameter r must be >= 0");
        if (phi != 0.0) throw DomainError("only phi = 0 is supported");
        if (hbar <= 0) throw DomainError("hbar must be > 0");
    }
};

// Symmetric Rabi model: coupling g in energy units, unitary parameter k.
// omega_a = 0 is accepted here (the coefficient and oracle paths are fine
// with it); operations that divide by omega_a reject it themselves.
struct RabiParams {
    double omega_c{1.0};
    double omega_a{1.0};
    double g{0.0};
    double k{0.0};
    double hbar{1.0};

    void validate() const {
        detail::require_finite(omega_c, "omega_c");
        detail::require_finite(omega_a, "omega_a");
        detail::require_finite(g, "g");
        detail::require_finite(k, "k");
        detail::require_finite(hbar, "hbar");
        if (omega_c <= 0) throw DomainError("omega_c must be > 0");
        if (omega_a < 0) throw DomainError("omega_a must be >= 0");
        if (hbar <= 0) throw DomainError("hbar must be > 0");
    }

    void require_positive_omega_a(const char* op) const {
        if (omega_a <= 0)
            throw DomainError(std::string(op) + ": omega_a must be > 0");
    }
};

} // namespace rabi
