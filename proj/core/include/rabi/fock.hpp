// fock.hpp — Truncated Fock-space Hamiltonian builders and the
// truncation-doubling convergence driver.

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rabi/closed_form.hpp"
#include "rabi/matrix.hpp"
#include "rabi/params.hpp"

namespace rabi {

// a and a† on the basis |0..N>; a[n-1][n] = sqrt(n).
std::pair<OperatorMatrix, OperatorMatrix> ladder_matrices(int N);

// B = cosh(r) a + sinh(r) a† (phi = 0).
OperatorMatrix squeezed_annihilator(int N, double r);

// Spin ⊗ boson builders. Spin index outermost with the excited state first,
// sigma_z = diag(+1, -1); dimension 2(N+1).
OperatorMatrix build_H_MJC(const ModelParams& p, int N);
OperatorMatrix build_H_SR(const RabiParams& p, int N);
OperatorMatrix build_H_AR(const RabiParams& p, double eps_asym, int N);
OperatorMatrix build_H_MSR(const RabiParams& p, double alpha, int N);

// Boson-only quadratic Hamiltonian A a†a + B + C (a + a†)²; dimension N+1.
OperatorMatrix build_H_quadratic(const QuadraticCoefficients& c, int N);

// Parity operator sigma_z ⊗ (-1)^{a†a} on the spin ⊗ boson basis.
OperatorMatrix parity_operator(int N);

struct TruncationReport {
    int N_initial{0};
    int N_final{0};
    std::vector<double> level_drift;  // per requested level, last two truncations
    bool converged{false};
    bool diverging{false};            // ground level sinking under N-doubling
};

struct ConvergedSpectrum {
    std::vector<double> eigenvalues;  // lowest `levels`, ascending
    TruncationReport report;
};

using HamiltonianBuilder = std::function<OperatorMatrix(int N)>;

// Doubles N from N0 until the lowest `levels` eigenvalues drift by at most
// `tol` (relative, floored at scale 1) between consecutive truncations, the
// cap is hit, or divergence of the ground level is detected. Cap-hit and
// divergence are reported, not thrown.
ConvergedSpectrum converged_spectrum(const HamiltonianBuilder& builder, int levels,
                                     double tol = 1e-8, int N0 = 32, int cap = 2048);

} // namespace rabi
