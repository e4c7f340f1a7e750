// eigen.hpp — Self-contained dense real-symmetric eigensolver
// (Householder tridiagonalization followed by implicit-shift QL).

#pragma once

#include <vector>

#include "rabi/matrix.hpp"

namespace rabi {

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    OperatorMatrix eigenvectors;      // orthonormal columns, same order
    double residual_norm{0.0};        // max_i ||M v_i - lambda_i v_i|| / ||M||_F
};

// Full decomposition. The input must be symmetric within 1e-12 * max|M_ij|;
// it is symmetrized before factorization. Throws DomainError on asymmetric
// input and ConvergenceFailure if the QL iteration cap is exceeded.
EigenDecomposition eigen_sym(const OperatorMatrix& M, double tol = 1e-12);

// Eigenvalues only (no vector accumulation); ascending.
std::vector<double> eigenvalues_sym(const OperatorMatrix& M, double tol = 1e-12);

} // namespace rabi
