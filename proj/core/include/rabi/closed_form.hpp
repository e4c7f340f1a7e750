// closed_form.hpp — Closed-form coefficients, Bogoliubov diagonalization,
// spectra, critical quantities, and asymptote energies.

#pragma once

#include <cmath>
#include <vector>

#include "rabi/errors.hpp"
#include "rabi/params.hpp"

namespace rabi {

// Coefficients of the projected quadratic Hamiltonian A a†a + B + C (a + a†)².
struct QuadraticCoefficients {
    double A{0.0};
    double B{0.0};
    double C{0.0};
};

struct BogoliubovSolution {
    double beta{0.0};         // angle of the diagonalizing transformation
    double epsilon_gap{0.0};  // quasiparticle gap sqrt(A(A+4C))
};

// One level of the quasiparticle spectrum. n = k² + m is the photon number,
// analytically continued to real k².
struct EnergyLevel {
    int m{0};
    double n{0.0};
    double E{0.0};
};

struct CriticalRoots {
    double k_minus{0.0};
    double k_plus{0.0};
    double g_c{0.0};
};

struct PhotonNumber {
    double n{0.0};
    bool integer_valid{false};  // true iff k² is (numerically) a nonnegative integer
};

enum class Branch { plus, minus };

// Relative tolerance used to decide the sign of A(A+4C) near the boundary.
inline constexpr double kPhaseTol = 1e-12;

// g_c = hbar sqrt(omega_a omega_c) / 2
inline double critical_coupling(double omega_a, double omega_c, double hbar = 1.0) {
    detail::require_finite(omega_a, "omega_a");
    detail::require_finite(omega_c, "omega_c");
    detail::require_finite(hbar, "hbar");
    if (omega_a < 0) throw DomainError("critical_coupling: omega_a must be >= 0");
    if (omega_c <= 0) throw DomainError("critical_coupling: omega_c must be > 0");
    if (hbar <= 0) throw DomainError("critical_coupling: hbar must be > 0");
    return hbar * std::sqrt(omega_a * omega_c) / 2.0;
}

// Coefficients of the spin-down projection of the modified JC Hamiltonian.
inline QuadraticCoefficients mjc_coefficients(const ModelParams& p) {
    p.validate();
    const double h = p.hbar, v = p.v, r = p.r;
    const double e2r = std::exp(-2.0 * r);
    const double ch = std::cosh(r);
    QuadraticCoefficients c;
    c.A = h * p.omega_c * (1.0 + v * v) + h * v * (p.Omega + p.omega_a * v) * e2r;
    c.B = -0.5 * h * p.omega_a * (1.0 - v * v)
        + 0.5 * h * v * (p.Omega + p.omega_a * v) * e2r
        + h * p.omega_c * v * v * ch * ch;
    c.C = -0.5 * h * v * p.Omega * std::cosh(2.0 * r)
        + 0.5 * h * p.omega_a * v * v * std::sinh(2.0 * r);
    return c;
}

// Same coefficients in the symmetric-Rabi limit.
inline QuadraticCoefficients sr_coefficients(const RabiParams& p) {
    p.validate();
    QuadraticCoefficients c;
    c.A = p.hbar * p.omega_c;
    c.B = -0.5 * p.hbar * p.omega_a + p.hbar * p.omega_c * p.k * p.k;
    c.C = -2.0 * p.k * p.g + p.hbar * p.omega_a * p.k * p.k;
    return c;
}

// Sign of the squared gap with the phase-classification tolerance applied:
// +1 normal, 0 boundary, -1 superradiant.
inline int gap_sign(const QuadraticCoefficients& c) {
    const double prod = c.A * (c.A + 4.0 * c.C);
    const double tol = kPhaseTol * c.A * c.A;
    if (prod > tol) return 1;
    if (prod < -tol) return -1;
    return 0;
}

// Solves A cosh β sinh β + C (cosh β + sinh β)² = 0 for the canonical branch
// β = (1/4) ln(A/(A+4C)).
inline BogoliubovSolution bogoliubov_angle(const QuadraticCoefficients& c) {
    detail::require_finite(c.A, "A");
    detail::require_finite(c.C, "C");
    if (c.A <= 0) throw DomainError("bogoliubov_angle: A must be > 0");
    switch (gap_sign(c)) {
        case -1:
            throw SuperradiantRegime("bogoliubov_angle: A(A+4C) < 0, gap imaginary");
        case 0:
            throw BoundaryDegenerate("bogoliubov_angle: A+4C = 0, angle diverges");
        default:
            break;
    }
    BogoliubovSolution s;
    s.beta = 0.25 * std::log(c.A / (c.A + 4.0 * c.C));
    s.epsilon_gap = std::sqrt(c.A * (c.A + 4.0 * c.C));
    return s;
}

// Spectral gap sqrt(A(A+4C)); zero on the boundary.
inline double epsilon_gap(const QuadraticCoefficients& c) {
    if (c.A <= 0) throw DomainError("epsilon_gap: A must be > 0");
    const int sign = gap_sign(c);
    if (sign < 0) throw SuperradiantRegime("epsilon_gap: A(A+4C) < 0");
    return sign == 0 ? 0.0 : std::sqrt(c.A * (c.A + 4.0 * c.C));
}

// E(m) = B - A/2 + sqrt(A(A+4C)) (m + 1/2), m = 0..m_max. On the boundary the
// gap is zero and all levels collapse to B - A/2.
inline std::vector<double> effective_spectrum(const QuadraticCoefficients& c, int m_max) {
    if (m_max < 0) throw DomainError("effective_spectrum: m_max must be >= 0");
    const double eps = epsilon_gap(c);
    std::vector<double> levels;
    levels.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m)
        levels.push_back(c.B - 0.5 * c.A + eps * (m + 0.5));
    return levels;
}

// Roots of hbar omega_c - 8 k g + 4 hbar omega_a k² = 0. The smaller root is
// taken from the Vieta product to avoid cancellation at g >> g_c.
inline CriticalRoots critical_k(double g, const RabiParams& p) {
    p.validate();
    p.require_positive_omega_a("critical_k");
    detail::require_finite(g, "g");
    if (g <= 0) throw DomainError("critical_k: requires g > 0");
    CriticalRoots roots;
    roots.g_c = critical_coupling(p.omega_a, p.omega_c, p.hbar);
    const double ratio = roots.g_c / g;
    if (ratio > 1.0) throw NoRealTransition("critical_k: g < g_c, roots complex");
    const double disc = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
    roots.k_plus = g / (p.hbar * p.omega_a) * (1.0 + disc);
    const double product = roots.g_c * roots.g_c / (p.hbar * p.hbar * p.omega_a * p.omega_a);
    roots.k_minus = product / roots.k_plus;
    return roots;
}

// Gap in factored form 4 g_c sqrt((k - k_+)(k - k_-)); valid for k outside
// the root interval.
inline double epsilon_gap_factored(const RabiParams& p) {
    p.validate();
    if (p.g <= 0 || p.k < 0) throw DomainError("epsilon_gap_factored: requires g > 0, k >= 0");
    const CriticalRoots roots = critical_k(p.g, p);
    const double rad = (p.k - roots.k_plus) * (p.k - roots.k_minus);
    if (rad < 0)
        throw SuperradiantRegime("epsilon_gap_factored: k between k_- and k_+");
    return 4.0 * roots.g_c * std::sqrt(rad);
}

// Normal-phase energy at the choice k = g / (hbar omega_a).
inline double normal_phase_energy(double g, const RabiParams& p, int m) {
    p.validate();
    p.require_positive_omega_a("normal_phase_energy");
    detail::require_finite(g, "g");
    if (g < 0) throw DomainError("normal_phase_energy: g must be >= 0");
    if (m < 0) throw DomainError("normal_phase_energy: m must be >= 0");
    const double gc = critical_coupling(p.omega_a, p.omega_c, p.hbar);
    const double x = g / gc;
    if (x > 1.0 + kPhaseTol)
        throw SuperradiantRegime("normal_phase_energy: g > g_c");
    const double rad = std::sqrt(std::max(0.0, 1.0 - x * x));
    return -0.5 * p.hbar * p.omega_a * (1.0 + p.omega_c / p.omega_a)
         + p.omega_c / (p.hbar * p.omega_a * p.omega_a) * g * g
         + p.hbar * p.omega_c * rad * (m + 0.5);
}

// <a†a> of the transformed vacuum sector: v² cosh²r + (1 + v²) m.
inline double photon_number_expectation(double v, double r, int m) {
    detail::require_finite(v, "v");
    detail::require_finite(r, "r");
    if (m < 0) throw DomainError("photon_number_expectation: m must be >= 0");
    const double ch = std::cosh(r);
    return v * v * ch * ch + (1.0 + v * v) * m;
}

// n = k² + m; a genuine cavity eigenvalue only when k² is a nonnegative integer.
inline PhotonNumber photon_number(double k, int m) {
    detail::require_finite(k, "k");
    if (m < 0) throw DomainError("photon_number: m must be >= 0");
    const double ksq = k * k;
    PhotonNumber out;
    out.n = ksq + m;
    out.integer_valid = std::abs(ksq - std::round(ksq)) <= 1e-9;
    return out;
}

// E_m(n) with k² = n - m continued to real values. Only g is read from p.
inline EnergyLevel energy_level(int m, double n, const RabiParams& p) {
    p.validate();
    detail::require_finite(n, "n");
    if (m < 0) throw DomainError("energy_level: m must be >= 0");
    if (n < m) throw DomainError("energy_level: requires n >= m");
    const double h = p.hbar;
    const double ksq = n - m;
    const double k = std::sqrt(ksq);
    double rad = h * p.omega_c * (h * p.omega_c - 8.0 * k * p.g + 4.0 * h * p.omega_a * ksq);
    // rounding-level negative values (exact asymptotes) are clamped to zero
    const double scale = h * p.omega_c *
        (h * p.omega_c + 8.0 * std::abs(k * p.g) + 4.0 * h * p.omega_a * ksq);
    if (rad < -kPhaseTol * scale)
        throw SuperradiantRegime("energy_level: negative radicand");
    rad = std::max(rad, 0.0);
    EnergyLevel lvl;
    lvl.m = m;
    lvl.n = n;
    lvl.E = -0.5 * h * (p.omega_a + p.omega_c) + h * p.omega_c * ksq + std::sqrt(rad) * (m + 0.5);
    return lvl;
}

// Large-n expansion of E_m(n); the remainder is O(1/sqrt(n)).
inline double asymptotic_energy(int m, double n, const RabiParams& p) {
    p.validate();
    detail::require_finite(n, "n");
    p.require_positive_omega_a("asymptotic_energy");
    if (n <= 0) throw DomainError("asymptotic_energy: n must be > 0");
    if (m < 0) throw DomainError("asymptotic_energy: m must be >= 0");
    const double h = p.hbar;
    const double sq = std::sqrt(n);
    return h * p.omega_c * n
         + 2.0 * h * std::sqrt(p.omega_a * p.omega_c) * (m + 0.5) * sq
         - 0.5 * h * (p.omega_a + p.omega_c)
         - h * p.omega_c * m
         - 2.0 * p.g * std::sqrt(p.omega_c / p.omega_a) * (m + 0.5);
}

// Photon number on a bifurcation branch, n_± = m + k_±².
inline double photon_number_at_transition(double g, const RabiParams& p, Branch branch, int m) {
    if (m < 0) throw DomainError("photon_number_at_transition: m must be >= 0");
    const CriticalRoots roots = critical_k(g, p);
    const double k = branch == Branch::plus ? roots.k_plus : roots.k_minus;
    return m + k * k;
}

// Energy along the steep asymptote k = 2g/(hbar omega_a), where the gap is
// exactly hbar omega_c.
inline double asymptote_energy_steep(int m, double g, const RabiParams& p) {
    p.validate();
    p.require_positive_omega_a("asymptote_energy_steep");
    detail::require_finite(g, "g");
    if (g <= 0) throw DomainError("asymptote_energy_steep: g must be > 0");
    if (m < 0) throw DomainError("asymptote_energy_steep: m must be >= 0");
    const double h = p.hbar;
    return h * p.omega_c * (m + 4.0 * g * g / (h * h * p.omega_a * p.omega_a)
                            - 0.5 * p.omega_a / p.omega_c);
}

// Energy along the flat asymptote k = hbar omega_c/(8g).
inline double asymptote_energy_flat(int m, double g, const RabiParams& p) {
    p.validate();
    p.require_positive_omega_a("asymptote_energy_flat");
    detail::require_finite(g, "g");
    if (g <= 0) throw DomainError("asymptote_energy_flat: g must be > 0");
    if (m < 0) throw DomainError("asymptote_energy_flat: m must be >= 0");
    const double h = p.hbar;
    const double gc = critical_coupling(p.omega_a, p.omega_c, p.hbar);
    return h * p.omega_c * (-0.5 - 0.5 * p.omega_a / p.omega_c
                            + h * h * p.omega_c * p.omega_c / (64.0 * g * g)
                            + gc / (2.0 * g) * (m + 0.5));
}

} // namespace rabi
