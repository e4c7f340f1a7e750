// fock.cpp — Matrix builders on the truncated Fock basis

#include "rabi/fock.hpp"

#include <cmath>

#include "rabi/eigen.hpp"
#include "rabi/errors.hpp"

namespace rabi {

namespace {
// Global index for spin s (0 = excited, 1 = ground) and Fock occupation n.
inline std::size_t idx(int s, int n, int N) {
    return static_cast<std::size_t>(s) * (N + 1) + static_cast<std::size_t>(n);
}
} // namespace

std::pair<OperatorMatrix, OperatorMatrix> ladder_matrices(int N) {
    if (N < 1) throw DomainError("ladder_matrices: N must be >= 1");
    OperatorMatrix a(static_cast<std::size_t>(N) + 1, N);
    for (int n = 1; n <= N; ++n)
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return {a, a.transpose()};
}

OperatorMatrix squeezed_annihilator(int N, double r) {
    detail::require_finite(r, "r");
    auto [a, a_dag] = ladder_matrices(N);
    return std::cosh(r) * a + std::sinh(r) * a_dag;
}

OperatorMatrix build_H_MJC(const ModelParams& p, int N) {
    p.validate();
    if (N < 1) throw DomainError("build_H_MJC: N must be >= 1");
    const double h = p.hbar;
    OperatorMatrix H(2 * (static_cast<std::size_t>(N) + 1), N);
    for (int s = 0; s < 2; ++s) {
        const double spin = s == 0 ? 0.5 : -0.5;
        for (int n = 0; n <= N; ++n)
            H(idx(s, n, N), idx(s, n, N)) = h * p.omega_c * n + h * p.omega_a * spin;
    }
    const double cpl_rw = 0.5 * h * p.Omega * std::cosh(p.r);  // sigma_+ a + h.c.
    const double cpl_cr = 0.5 * h * p.Omega * std::sinh(p.r);  // sigma_- a + h.c.
    for (int n = 0; n < N; ++n) {
        const double root = std::sqrt(static_cast<double>(n + 1));
        H(idx(0, n, N), idx(1, n + 1, N)) += cpl_rw * root;
        H(idx(1, n + 1, N), idx(0, n, N)) += cpl_rw * root;
        H(idx(1, n, N), idx(0, n + 1, N)) += cpl_cr * root;
        H(idx(0, n + 1, N), idx(1, n, N)) += cpl_cr * root;
    }
    return H;
}

namespace {
// hbar omega_c a†a + hbar omega_a sigma_z/2 + (g(a + a†) + shift) sigma_x,
// plus a scalar added to the diagonal. Covers H_SR, H_AR, and H_MSR.
OperatorMatrix build_spin_boson(const RabiParams& p, double g, double sigma_x_shift,
                                double boson_linear, double scalar, int N) {
    p.validate();
    if (N < 1) throw DomainError("spin-boson builder: N must be >= 1");
    const double h = p.hbar;
    OperatorMatrix H(2 * (static_cast<std::size_t>(N) + 1), N);
    for (int s = 0; s < 2; ++s) {
        const double spin = s == 0 ? 0.5 : -0.5;
        for (int n = 0; n <= N; ++n) {
            const std::size_t i = idx(s, n, N);
            H(i, i) = h * p.omega_c * n + h * p.omega_a * spin + scalar;
            if (n < N) {
                const double root = std::sqrt(static_cast<double>(n + 1));
                H(i, idx(s, n + 1, N)) += boson_linear * root;
                H(idx(s, n + 1, N), i) += boson_linear * root;
            }
        }
    }
    for (int n = 0; n <= N; ++n) {
        H(idx(0, n, N), idx(1, n, N)) += sigma_x_shift;
        H(idx(1, n, N), idx(0, n, N)) += sigma_x_shift;
        if (n < N) {
            const double root = std::sqrt(static_cast<double>(n + 1));
            for (int s = 0; s < 2; ++s) {
                H(idx(s, n, N), idx(1 - s, n + 1, N)) += g * root;
                H(idx(1 - s, n + 1, N), idx(s, n, N)) += g * root;
            }
        }
    }
    return H;
}
} // namespace

OperatorMatrix build_H_SR(const RabiParams& p, int N) {
    return build_spin_boson(p, p.g, 0.0, 0.0, 0.0, N);
}

OperatorMatrix build_H_AR(const RabiParams& p, double eps_asym, int N) {
    detail::require_finite(eps_asym, "eps_asym");
    return build_spin_boson(p, p.g, eps_asym, 0.0, 0.0, N);
}

OperatorMatrix build_H_MSR(const RabiParams& p, double alpha, int N) {
    detail::require_finite(alpha, "alpha");
    return build_spin_boson(p, p.g, 2.0 * p.g * alpha,
                            p.hbar * p.omega_c * alpha,
                            p.hbar * p.omega_c * alpha * alpha, N);
}

OperatorMatrix build_H_quadratic(const QuadraticCoefficients& c, int N) {
    if (N < 1) throw DomainError("build_H_quadratic: N must be >= 1");
    OperatorMatrix H(static_cast<std::size_t>(N) + 1, N);
    for (int n = 0; n <= N; ++n) {
        H(n, n) = c.A * n + c.B + c.C * (2.0 * n + 1.0);
        if (n + 2 <= N) {
            const double off = c.C * std::sqrt(static_cast<double>((n + 1) * (n + 2)));
            H(n, n + 2) = off;
            H(n + 2, n) = off;
        }
    }
    return H;
}

OperatorMatrix parity_operator(int N) {
    if (N < 1) throw DomainError("parity_operator: N must be >= 1");
    OperatorMatrix P(2 * (static_cast<std::size_t>(N) + 1), N);
    for (int s = 0; s < 2; ++s)
        for (int n = 0; n <= N; ++n)
            P(idx(s, n, N), idx(s, n, N)) = (s == 0 ? 1.0 : -1.0) * (n % 2 == 0 ? 1.0 : -1.0);
    return P;
}

ConvergedSpectrum converged_spectrum(const HamiltonianBuilder& builder, int levels,
                                     double tol, int N0, int cap) {
    if (levels < 1) throw DomainError("converged_spectrum: levels must be >= 1");
    if (N0 < levels + 10) throw DomainError("converged_spectrum: N0 must be >= levels + 10");
    if (tol <= 0) throw DomainError("converged_spectrum: tol must be > 0");
    if (cap < N0) throw DomainError("converged_spectrum: cap must be >= N0");

    auto lowest = [&](int N) {
        std::vector<double> all = eigenvalues_sym(builder(N));
        all.resize(static_cast<std::size_t>(levels));
        return all;
    };

    ConvergedSpectrum out;
    out.report.N_initial = N0;
    out.report.level_drift.assign(static_cast<std::size_t>(levels), 0.0);

    int N = N0;
    std::vector<double> prev = lowest(N);
    double prev_drop = 0.0;
    int drop_strikes = 0;

    while (N < cap) {
        N = std::min(2 * N, cap);
        std::vector<double> cur = lowest(N);

        bool ok = true;
        for (int i = 0; i < levels; ++i) {
            const double denom = std::max(std::abs(cur[i]), 1.0);
            out.report.level_drift[i] = std::abs(cur[i] - prev[i]) / denom;
            if (out.report.level_drift[i] > tol) ok = false;
        }

        // Unbounded-below detection: ground level keeps sinking without the
        // decrease shrinking between doublings.
        const double drop = prev[0] - cur[0];
        if (drop > 100.0 * tol * std::max(std::abs(cur[0]), 1.0) && drop > 0.5 * prev_drop) {
            if (++drop_strikes >= 2) {
                out.eigenvalues = std::move(cur);
                out.report.N_final = N;
                out.report.diverging = true;
                return out;
            }
        } else {
            drop_strikes = 0;
        }
        prev_drop = std::max(drop, 0.0);

        if (ok) {
            out.eigenvalues = std::move(cur);
            out.report.N_final = N;
            out.report.converged = true;
            return out;
        }
        prev = std::move(cur);
    }
    out.eigenvalues = std::move(prev);
    out.report.N_final = N;
    return out;
}

} // namespace rabi
