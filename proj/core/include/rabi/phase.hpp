// phase.hpp — Phase classification, boundary curve, bifurcation branches,
// and asymptote geometry in reduced coordinates (kappa, g/g_c).

#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "rabi/closed_form.hpp"

namespace rabi {

enum class Region { normal, boundary, superradiant };

inline const char* region_code(Region r) {
    switch (r) {
        case Region::normal: return "np";
        case Region::boundary: return "boundary";
        default: return "sp";
    }
}

struct PhasePoint {
    double kappa{0.0};          // 2 k sqrt(omega_a / omega_c)
    double g_over_gc{0.0};
    Region region{Region::normal};
    double epsilon_gap_sq{0.0}; // sign carries the phase information
};

// Classifies a raw (g, k) point via the sign of A(A+4C).
inline PhasePoint classify(double g, double k, const RabiParams& p) {
    p.validate();
    p.require_positive_omega_a("classify");
    detail::require_finite(g, "g");
    detail::require_finite(k, "k");
    if (g <= 0) throw DomainError("classify: g must be > 0");
    if (k < 0) throw DomainError("classify: k must be >= 0");
    RabiParams q = p;
    q.g = g;
    q.k = k;
    const QuadraticCoefficients c = sr_coefficients(q);
    PhasePoint pt;
    pt.kappa = 2.0 * k * std::sqrt(p.omega_a / p.omega_c);
    pt.g_over_gc = g / critical_coupling(p.omega_a, p.omega_c, p.hbar);
    pt.epsilon_gap_sq = c.A * (c.A + 4.0 * c.C);
    switch (gap_sign(c)) {
        case 1: pt.region = Region::normal; break;
        case -1: pt.region = Region::superradiant; break;
        default: pt.region = Region::boundary; break;
    }
    return pt;
}

// Classification directly in reduced coordinates. In these variables
// eps²/(hbar omega_c)² = 1 + kappa² - 2 kappa (g/g_c), independent of the
// raw frequencies.
inline PhasePoint classify_reduced(double kappa, double g_over_gc) {
    detail::require_finite(kappa, "kappa");
    detail::require_finite(g_over_gc, "g_over_gc");
    if (kappa < 0) throw DomainError("classify_reduced: kappa must be >= 0");
    if (g_over_gc <= 0) throw DomainError("classify_reduced: g/g_c must be > 0");
    PhasePoint pt;
    pt.kappa = kappa;
    pt.g_over_gc = g_over_gc;
    pt.epsilon_gap_sq = 1.0 + kappa * kappa - 2.0 * kappa * g_over_gc;
    if (pt.epsilon_gap_sq > kPhaseTol) pt.region = Region::normal;
    else if (pt.epsilon_gap_sq < -kPhaseTol) pt.region = Region::superradiant;
    else pt.region = Region::boundary;
    return pt;
}

// Phase boundary g/g_c = (kappa² + 1)/(2 kappa); minimum 1 at kappa = 1.
inline double boundary_curve(double kappa) {
    detail::require_finite(kappa, "kappa");
    if (kappa <= 0) throw DomainError("boundary_curve: kappa must be > 0");
    return (kappa * kappa + 1.0) / (2.0 * kappa);
}

// Reduced bifurcation branches kappa_± with kappa_+ kappa_- = 1 and
// kappa_+ + kappa_- = 2 g/g_c. Returns (kappa_minus, kappa_plus).
inline std::pair<double, double> bifurcation_branches(double g_over_gc) {
    detail::require_finite(g_over_gc, "g_over_gc");
    if (g_over_gc < 1.0)
        throw NoRealTransition("bifurcation_branches: g/g_c < 1");
    const double x = g_over_gc;
    const double plus = x + std::sqrt(std::max(0.0, x * x - 1.0));
    return {1.0 / plus, plus};
}

// Asymptotes of the boundary: steep kappa/2 and flat 1/(2 kappa). Their sum
// is the boundary curve exactly.
inline std::pair<double, double> asymptote_lines(double kappa) {
    detail::require_finite(kappa, "kappa");
    if (kappa <= 0) throw DomainError("asymptote_lines: kappa must be > 0");
    return {0.5 * kappa, 0.5 / kappa};
}

// Row-major grid of classifications: kappa outer (ascending), g/g_c inner
// (ascending). Deterministic.
inline std::vector<PhasePoint> grid_scan(double kappa_min, double kappa_max,
                                         double g_min, double g_max,
                                         int n_kappa, int n_g) {
    if (!(kappa_min > 0) || !(g_min > 0) || kappa_max < kappa_min || g_max < g_min)
        throw DomainError("grid_scan: ranges must be positive and ordered");
    if (n_kappa < 2 || n_g < 2)
        throw DomainError("grid_scan: resolution must be >= 2 per axis");
    std::vector<PhasePoint> grid;
    grid.reserve(static_cast<std::size_t>(n_kappa) * static_cast<std::size_t>(n_g));
    const double dk = (kappa_max - kappa_min) / (n_kappa - 1);
    const double dg = (g_max - g_min) / (n_g - 1);
    for (int i = 0; i < n_kappa; ++i) {
        const double kappa = kappa_min + i * dk;
        for (int j = 0; j < n_g; ++j)
            grid.push_back(classify_reduced(kappa, g_min + j * dg));
    }
    return grid;
}

} // namespace rabi
