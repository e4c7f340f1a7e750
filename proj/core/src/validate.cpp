// validate.cpp — Invariant suites for every module, runnable as one harness

#include "rabi/validate.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "rabi/closed_form.hpp"
#include "rabi/eigen.hpp"
#include "rabi/fock.hpp"
#include "rabi/phase.hpp"

namespace rabi {

namespace {

double relerr(double got, double want, double floor = 1.0) {
    return std::abs(got - want) / std::max(std::abs(want), floor);
}

struct Harness {
    const ValidateOptions& opts;
    double c_sign;  // -1 under error injection
    std::vector<CheckResult> results;

    explicit Harness(const ValidateOptions& o)
        : opts(o), c_sign(o.inject_error ? -1.0 : 1.0) {}

    bool suite_enabled(const std::string& name) const {
        if (opts.only.empty()) return true;
        return name.compare(0, name.find('/'), opts.only) == 0;
    }

    void run(const std::string& name, const std::function<void(CheckResult&)>& body) {
        if (!suite_enabled(name)) return;
        CheckResult r;
        r.name = name;
        r.passed = true;
        try {
            body(r);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        results.push_back(r);
    }

    // Coefficients as seen by the closed-form side; the oracle always uses
    // the unmodified values, so injection must surface as a mismatch.
    QuadraticCoefficients coeffs(const RabiParams& p) const {
        QuadraticCoefficients c = sr_coefficients(p);
        c.C *= c_sign;
        return c;
    }
};

void expect(CheckResult& r, bool cond, double metric, const std::string& what) {
    r.metric = std::max(r.metric, metric);
    if (!cond && r.passed) {
        r.passed = false;
        r.detail = what;
    }
}

const RabiParams kUnit{1.0, 1.0, 0.0, 0.0, 1.0};

std::vector<RabiParams> parameter_sets() {
    return {
        {1.0, 1.0, 0.0, 0.0, 1.0},
        {0.8, 2.5, 0.0, 0.0, 1.0},
        {3.0, 0.4, 0.0, 0.0, 1.0},
        {1.0, 1.0, 0.0, 0.0, 0.5},
    };
}

// ----------------------------- algebra ------------------------------------

void suite_algebra(Harness& h) {
    h.run("algebra/root_condition", [&](CheckResult& r) {
        for (const RabiParams& p : parameter_sets()) {
            const double gc = critical_coupling(p.omega_a, p.omega_c, p.hbar);
            for (double x : {1.0, 1.2, 2.0, 5.0, 20.0}) {
                const double g = x * gc;
                const CriticalRoots roots = critical_k(g, p);
                for (double k : {roots.k_minus, roots.k_plus}) {
                    const double res = p.hbar * p.omega_c - 8.0 * k * g
                                     + 4.0 * p.hbar * p.omega_a * k * k;
                    const double scale = p.hbar * p.omega_c + 8.0 * k * g
                                       + 4.0 * p.hbar * p.omega_a * k * k;
                    expect(r, std::abs(res) <= 1e-12 * scale, std::abs(res) / scale,
                           "root does not zero the quadratic");
                }
            }
        }
    });

    h.run("algebra/gap_factored", [&](CheckResult& r) {
        for (const RabiParams& p0 : parameter_sets()) {
            const double gc = critical_coupling(p0.omega_a, p0.omega_c, p0.hbar);
            for (double x : {1.0, 1.5, 3.0, 8.0}) {
                RabiParams p = p0;
                p.g = x * gc;
                const CriticalRoots roots = critical_k(p.g, p);
                for (double k : {0.3 * roots.k_minus, 0.9 * roots.k_minus,
                                 1.1 * roots.k_plus, 2.5 * roots.k_plus}) {
                    p.k = k;
                    const QuadraticCoefficients c = h.coeffs(p);
                    const double direct_sq = c.A * (c.A + 4.0 * c.C);
                    const double fact = epsilon_gap_factored(p);
                    const double err = relerr(fact * fact, direct_sq,
                                              1e-12 * c.A * c.A);
                    expect(r, err <= 1e-12, err, "factored gap != sqrt(A(A+4C))");
                }
            }
        }
    });

    h.run("algebra/branch_identities", [&](CheckResult& r) {
        for (double x = 1.0; x <= 100.0; x *= 1.7) {
            auto [km, kp] = bifurcation_branches(x);
            expect(r, relerr(km * kp, 1.0) <= 1e-12, relerr(km * kp, 1.0),
                   "kappa_+ kappa_- != 1");
            expect(r, relerr(km + kp, 2.0 * x) <= 1e-12, relerr(km + kp, 2.0 * x),
                   "kappa_+ + kappa_- != 2 g/g_c");
            // reduced branches agree with the raw roots
            for (const RabiParams& p : parameter_sets()) {
                const double gc = critical_coupling(p.omega_a, p.omega_c, p.hbar);
                const CriticalRoots roots = critical_k(x * gc, p);
                const double scale = 2.0 * std::sqrt(p.omega_a / p.omega_c);
                expect(r, relerr(scale * roots.k_plus, kp) <= 1e-12,
                       relerr(scale * roots.k_plus, kp), "reduced k_+ mismatch");
                expect(r, relerr(scale * roots.k_minus, km) <= 1e-12,
                       relerr(scale * roots.k_minus, km), "reduced k_- mismatch");
            }
        }
    });

    h.run("algebra/boundary_decomposition", [&](CheckResult& r) {
        for (double kappa = 0.05; kappa <= 40.0; kappa *= 1.31) {
            auto [steep, flat] = asymptote_lines(kappa);
            const double err = relerr(steep + flat, boundary_curve(kappa));
            expect(r, err <= 1e-12, err, "boundary != steep + flat");
        }
    });

    h.run("algebra/steep_combination", [&](CheckResult& r) {
        for (const RabiParams& p0 : parameter_sets()) {
            for (double g : {0.3, 1.0, 2.5}) {
                for (int m = 0; m <= 3; ++m) {
                    RabiParams p = p0;
                    p.g = g;
                    const double k = 2.0 * g / (p.hbar * p.omega_a);
                    const double ksq = k * k;
                    const EnergyLevel lvl = energy_level(m, ksq + m, p);
                    const double lhs = lvl.E / (p.hbar * p.omega_c)
                                     + 0.5 * p.omega_a / p.omega_c;
                    expect(r, relerr(lhs, m + ksq) <= 1e-12, relerr(lhs, m + ksq),
                           "steep-asymptote combination != m + k^2");
                    const double closed = asymptote_energy_steep(m, g, p);
                    expect(r, relerr(closed, lvl.E) <= 1e-12, relerr(closed, lvl.E),
                           "steep closed form != energy_level");
                }
            }
        }
    });

    h.run("algebra/flat_combination", [&](CheckResult& r) {
        for (const RabiParams& p0 : parameter_sets()) {
            const double gc = critical_coupling(p0.omega_a, p0.omega_c, p0.hbar);
            for (double g : {0.5, 2.0, 6.0}) {
                for (int m = 0; m <= 3; ++m) {
                    RabiParams p = p0;
                    p.g = g;
                    const double k = p.hbar * p.omega_c / (8.0 * g);
                    const EnergyLevel lvl = energy_level(m, k * k + m, p);
                    const double hw = p.hbar * p.omega_c;
                    const double closed = asymptote_energy_flat(m, g, p);
                    // the -gc/(4g) term makes the combination exactly m; the
                    // often-quoted -gc/(2g) variant lands on m - 1/2 instead
                    const double lhs = 2.0 * (g / gc)
                        * (closed / hw + 0.5 * p.omega_a / p.omega_c + 0.5
                           - hw * hw / (64.0 * g * g) - 0.25 * gc / g);
                    expect(r, std::abs(lhs - m) <= 1e-12 * std::max(1.0, double(m)),
                           std::abs(lhs - m), "flat-asymptote combination != m");
                    // packing n = k² + m quantizes k², so compare closed form
                    // and energy_level at the consistent (k, g) pair actually
                    // represented by n
                    const double k_eff = std::sqrt(lvl.n - m);
                    const double g_eff = hw / (8.0 * k_eff);
                    RabiParams pe = p;
                    pe.g = g_eff;
                    const double lvl_eff = energy_level(m, lvl.n, pe).E;
                    const double closed_eff = asymptote_energy_flat(m, g_eff, p);
                    expect(r, relerr(closed_eff, lvl_eff) <= 1e-12, relerr(closed_eff, lvl_eff),
                           "flat closed form != energy_level");
                }
            }
        }
    });
}

// ---------------------------- bogoliubov -----------------------------------

void suite_bogoliubov(Harness& h) {
    h.run("bogoliubov/eq_residual", [&](CheckResult& r) {
        std::mt19937 rng(h.opts.seed);
        std::uniform_real_distribution<double> dA(0.2, 3.0), dS(0.05, 5.0);
        for (int t = 0; t < 200; ++t) {
            QuadraticCoefficients c;
            c.A = dA(rng);
            c.C = (dS(rng) - c.A) / 4.0;
            const BogoliubovSolution s = bogoliubov_angle(c);
            const double ch = std::cosh(s.beta), sh = std::sinh(s.beta);
            const double res = c.A * ch * sh + c.C * (ch + sh) * (ch + sh);
            expect(r, std::abs(res) <= 1e-12 * std::abs(c.A),
                   std::abs(res) / std::abs(c.A), "cancellation condition violated");
            expect(r, s.epsilon_gap >= 0, 0.0, "negative gap");
        }
    });

    h.run("bogoliubov/phase_errors", [&](CheckResult& r) {
        bool threw = false;
        try {
            bogoliubov_angle({1.0, 0.0, -0.3});
        } catch (const SuperradiantRegime&) {
            threw = true;
        }
        expect(r, threw, 0.0, "superradiant input not rejected");
        threw = false;
        try {
            bogoliubov_angle({1.0, 0.0, -0.25});
        } catch (const BoundaryDegenerate&) {
            threw = true;
        }
        expect(r, threw, 0.0, "boundary input not rejected");
    });
}

// ------------------------------ limits -------------------------------------

ModelParams mjc_limit_params(double g, double k, double r,
                             double omega_c, double omega_a, double hbar) {
    ModelParams p;
    p.omega_c = omega_c;
    p.omega_a = omega_a;
    p.hbar = hbar;
    p.r = r;
    p.Omega = 4.0 * g * std::exp(-r) / hbar;
    p.v = 2.0 * k * std::exp(-r);
    return p;
}

void suite_limits(Harness& h) {
    h.run("limits/symmetric_limit_grid", [&](CheckResult& r) {
        struct Freq { double wc, wa, hbar; };
        for (Freq f : {Freq{1.0, 1.0, 1.0}, Freq{0.5, 2.0, 1.0}}) {
            for (int i = 0; i < 5; ++i) {
                for (int j = 0; j < 5; ++j) {
                    const double g = 0.1 + i * (2.0 - 0.1) / 4.0;
                    const double k = 0.1 + j * (2.0 - 0.1) / 4.0;
                    const QuadraticCoefficients lim =
                        mjc_coefficients(mjc_limit_params(g, k, 12.0, f.wc, f.wa, f.hbar));
                    const RabiParams p{f.wc, f.wa, g, k, f.hbar};
                    const QuadraticCoefficients sr = sr_coefficients(p);
                    const double err = std::max({relerr(lim.A, sr.A, 1e-3),
                                                 relerr(lim.B, sr.B, 1e-3),
                                                 relerr(lim.C, sr.C, 1e-3)});
                    expect(r, err <= 1e-8, err, "r=12 limit off the Rabi coefficients");
                }
            }
        }
    });

    h.run("limits/r_doubling", [&](CheckResult& r) {
        auto max_err = [&](double g, double k, double rr) {
            const QuadraticCoefficients lim =
                mjc_coefficients(mjc_limit_params(g, k, rr, 1.0, 1.0, 1.0));
            const QuadraticCoefficients sr = sr_coefficients({1.0, 1.0, g, k, 1.0});
            return std::max({std::abs(lim.A - sr.A), std::abs(lim.B - sr.B),
                             std::abs(lim.C - sr.C)});
        };
        for (auto [g, k] : {std::pair{0.5, 1.0}, {1.5, 0.7}, {1.0, 2.0}}) {
            const double e8 = max_err(g, k, 8.0);
            const double e16 = max_err(g, k, 16.0);
            expect(r, e16 > 0 && e16 <= e8 * std::exp(-15.0), e16 / e8,
                   "error does not shrink by e^-15 when doubling r");
        }
    });

    h.run("limits/photon_limit", [&](CheckResult& r) {
        const double rr = 15.0;
        for (double k : {0.5, 1.0, 2.0}) {
            for (int m : {0, 2, 5}) {
                const double got =
                    photon_number_expectation(2.0 * k * std::exp(-rr), rr, m);
                expect(r, std::abs(got - (k * k + m)) <= 1e-10,
                       std::abs(got - (k * k + m)), "photon-number limit violated");
            }
        }
    });
}

// ----------------------------- spectrum ------------------------------------

void suite_spectrum(Harness& h) {
    h.run("spectrum/increment", [&](CheckResult& r) {
        std::mt19937 rng(h.opts.seed + 1);
        std::uniform_real_distribution<double> dA(0.3, 2.0), dS(0.1, 4.0), dB(-1.0, 1.0);
        for (int t = 0; t < 50; ++t) {
            QuadraticCoefficients c;
            c.A = dA(rng);
            c.C = (dS(rng) - c.A) / 4.0;
            c.B = dB(rng);
            const double eps = bogoliubov_angle(c).epsilon_gap;
            const std::vector<double> lv = effective_spectrum(c, 6);
            for (std::size_t m = 0; m + 1 < lv.size(); ++m) {
                expect(r, lv[m + 1] > lv[m], 0.0, "spectrum not strictly increasing");
                const double err = relerr(lv[m + 1] - lv[m], eps);
                expect(r, err <= 1e-12, err, "level increment != gap");
            }
        }
    });

    h.run("spectrum/normal_phase_path", [&](CheckResult& r) {
        for (const RabiParams& p0 : parameter_sets()) {
            const double gc = critical_coupling(p0.omega_a, p0.omega_c, p0.hbar);
            for (double x : {0.0, 0.3, 0.7, 0.95, 1.0}) {
                RabiParams p = p0;
                p.g = x * gc;
                p.k = p.g / (p.hbar * p.omega_a);
                const std::vector<double> lv = effective_spectrum(sr_coefficients(p), 4);
                for (int m = 0; m <= 4; ++m) {
                    const double direct = normal_phase_energy(p.g, p, m);
                    const double err = relerr(direct, lv[static_cast<std::size_t>(m)]);
                    expect(r, err <= 1e-10, err,
                           "normal-phase energy != quadratic spectrum at k = g/(hbar omega_a)");
                }
            }
        }
    });
}

// ---------------------------- asymptotics ----------------------------------

void suite_asymptotics(Harness& h) {
    RabiParams p = kUnit;
    p.g = 0.3;

    h.run("asymptotics/bounded_residual", [&](CheckResult& r) {
        for (int m : {0, 1}) {
            double lo = 1e300, hi = 0.0;
            for (double n : {1e3, 1e4, 1e5, 1e6}) {
                const double delta =
                    energy_level(m, n, p).E - asymptotic_energy(m, n, p);
                const double scaled = std::abs(delta) * std::sqrt(n);
                lo = std::min(lo, scaled);
                hi = std::max(hi, scaled);
            }
            expect(r, hi <= 2.0 * lo, hi / lo,
                   "sqrt(n)-scaled residual not within factor 2 of constant");
        }
    });

    h.run("asymptotics/decay_ratio", [&](CheckResult& r) {
        const double d1 = energy_level(0, 1e4, p).E - asymptotic_energy(0, 1e4, p);
        const double d2 = energy_level(0, 4e4, p).E - asymptotic_energy(0, 4e4, p);
        const double ratio = d2 / d1;
        expect(r, std::abs(ratio - 0.5) <= 0.1, ratio,
               "quadrupling n does not halve the residual");
    });

    h.run("asymptotics/level_spacing", [&](CheckResult& r) {
        // the deviation is (m + 1/2) sqrt(omega_a omega_c / n), so the 1e-3
        // bound at n = 1e6 can only hold for the ground band
        const double spacing =
            energy_level(0, 1e6 + 1.0, p).E - energy_level(0, 1e6, p).E;
        const double err = relerr(spacing, p.hbar * p.omega_c);
        expect(r, err <= 1e-3, err, "level spacing not near hbar omega_c");
    });
}

// ------------------------------ oracle -------------------------------------

void suite_oracle(Harness& h) {
    h.run("oracle/quadratic_equivalence", [&](CheckResult& r) {
        const auto t0 = std::chrono::steady_clock::now();
        std::mt19937 rng(h.opts.seed + 2);
        std::uniform_real_distribution<double> dA(0.5, 2.0), dS(0.1, 3.0), dB(-1.0, 1.0);
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            QuadraticCoefficients c;
            c.A = dA(rng);
            c.C = (dS(rng) - c.A) / 4.0;
            c.B = dB(rng);
            QuadraticCoefficients closed = c;
            closed.C *= h.c_sign;
            const std::vector<double> exact = effective_spectrum(closed, 7);
            const ConvergedSpectrum num = converged_spectrum(
                [&](int N) { return build_H_quadratic(c, N); }, 8, 1e-9, 32, 2048);
            expect(r, num.report.converged, 0.0, "oracle did not converge");
            for (int i = 0; i < 8; ++i)
                worst = std::max(worst,
                                 relerr(num.eigenvalues[static_cast<std::size_t>(i)],
                                        exact[static_cast<std::size_t>(i)]));
        }
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0).count();
        std::ostringstream os;
        os << "max rel err " << worst << ", " << secs << " s";
        r.detail = os.str();
        expect(r, worst <= 1e-6, worst, "oracle and closed form disagree");
        expect(r, secs < 60.0, secs, "runtime budget exceeded");
    });

    h.run("oracle/commutator_corner", [&](CheckResult& r) {
        const int N = 12;
        auto [a, ad] = ladder_matrices(N);
        const OperatorMatrix comm = a * ad - ad * a;
        for (int i = 0; i <= N; ++i) {
            for (int j = 0; j <= N; ++j) {
                const double want = (i == j) ? (i == N ? -double(N) : 1.0) : 0.0;
                expect(r, std::abs(comm(i, j) - want) <= 1e-14,
                       std::abs(comm(i, j) - want), "truncated commutator off");
            }
        }
    });

    h.run("oracle/builder_symmetry", [&](CheckResult& r) {
        ModelParams mp;
        mp.omega_c = 1.1;
        mp.omega_a = 0.9;
        mp.Omega = 0.8;
        mp.r = 1.2;
        mp.v = 0.3;
        RabiParams rp{0.9, 1.3, 0.7, 0.0, 1.0};
        const int N = 20;
        for (const OperatorMatrix& H :
             {build_H_MJC(mp, N), build_H_SR(rp, N), build_H_AR(rp, 0.2, N),
              build_H_MSR(rp, 0.6, N), build_H_quadratic({1.2, -0.3, 0.4}, N)}) {
            const double res = H.symmetry_residual();
            expect(r, res <= 1e-12 * H.max_abs(), res, "builder output not symmetric");
        }
    });

    h.run("oracle/parity", [&](CheckResult& r) {
        RabiParams rp{0.9, 1.3, 0.7, 0.0, 1.0};
        const int N = 24;
        const OperatorMatrix H = build_H_SR(rp, N);
        const OperatorMatrix P = parity_operator(N);
        const double res = (H * P - P * H).frobenius_norm();
        expect(r, res <= 1e-12 * H.frobenius_norm(), res / H.frobenius_norm(),
               "H_SR does not commute with parity");
    });

    h.run("oracle/eigen_reconstruction", [&](CheckResult& r) {
        std::mt19937 rng(h.opts.seed + 3);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        const std::size_t n = 50;
        OperatorMatrix M(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                M(i, j) = M(j, i) = dist(rng);
        const EigenDecomposition ed = eigen_sym(M);
        for (std::size_t i = 1; i < n; ++i)
            expect(r, ed.eigenvalues[i] >= ed.eigenvalues[i - 1], 0.0,
                   "eigenvalues not ascending");
        double recon = 0.0, ortho = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                double mij = 0.0, qq = 0.0;
                for (std::size_t c = 0; c < n; ++c) {
                    mij += ed.eigenvectors(i, c) * ed.eigenvalues[c] * ed.eigenvectors(j, c);
                    qq += ed.eigenvectors(c, i) * ed.eigenvectors(c, j);
                }
                recon += (mij - M(i, j)) * (mij - M(i, j));
                ortho = std::max(ortho, std::abs(qq - (i == j ? 1.0 : 0.0)));
            }
        }
        recon = std::sqrt(recon);
        expect(r, recon <= 1e-9 * M.frobenius_norm(), recon / M.frobenius_norm(),
               "reconstruction error too large");
        expect(r, ortho <= 1e-10, ortho, "eigenvectors not orthonormal");
    });

    h.run("oracle/jc_doublet", [&](CheckResult& r) {
        ModelParams p;
        p.omega_c = 1.1;
        p.omega_a = 0.9;
        p.Omega = 0.8;
        p.r = 0.0;
        const int N = 12;
        const std::vector<double> ev = eigenvalues_sym(build_H_MJC(p, N));
        // r=0 conserves excitation number: the first doublet diagonalizes in
        // the {|e,0>, |g,1>} block.
        const double mean = 0.5 * p.hbar * p.omega_c;
        const double split = std::sqrt(0.25 * p.hbar * p.hbar *
                                           (p.omega_a - p.omega_c) * (p.omega_a - p.omega_c) +
                                       0.25 * p.hbar * p.hbar * p.Omega * p.Omega);
        for (double want : {mean - split, mean + split}) {
            double best = 1e300;
            for (double lam : ev) best = std::min(best, std::abs(lam - want));
            expect(r, best <= 1e-10, best, "JC doublet level missing from spectrum");
        }
    });
}

// ------------------------- displacement & AR --------------------------------

void suite_displacement(Harness& h) {
    h.run("displacement/msr_invariance", [&](CheckResult& r) {
        RabiParams p = kUnit;
        p.g = 0.5;
        const ConvergedSpectrum sr = converged_spectrum(
            [&](int N) { return build_H_SR(p, N); }, 6, h.opts.oracle_tol, 32, 1024);
        expect(r, sr.report.converged, 0.0, "H_SR oracle did not converge");
        for (double alpha : {0.25, 0.5, 1.0}) {
            const ConvergedSpectrum msr = converged_spectrum(
                [&](int N) { return build_H_MSR(p, alpha, N); }, 6,
                h.opts.oracle_tol, 32, 1024);
            expect(r, msr.report.converged, 0.0, "H_MSR oracle did not converge");
            for (std::size_t i = 0; i < 6; ++i) {
                const double err = relerr(msr.eigenvalues[i], sr.eigenvalues[i]);
                expect(r, err <= 1e-4, err, "displaced spectrum differs");
            }
        }
    });
}

void suite_asymmetric(Harness& h) {
    h.run("asymmetric/large_g_decay", [&](CheckResult& r) {
        RabiParams p = kUnit;
        const double gc = critical_coupling(p.omega_a, p.omega_c, p.hbar);
        const double eps = 0.1 * p.hbar * p.omega_c;
        std::ostringstream os;
        double prev = 1e300;
        for (double x : {2.0, 4.0, 8.0}) {
            p.g = x * gc;
            const ConvergedSpectrum sr = converged_spectrum(
                [&](int N) { return build_H_SR(p, N); }, 1, h.opts.oracle_tol, 64, 512);
            const ConvergedSpectrum ar = converged_spectrum(
                [&](int N) { return build_H_AR(p, eps, N); }, 1, h.opts.oracle_tol, 64, 512);
            expect(r, sr.report.converged && ar.report.converged, 0.0,
                   "oracle did not converge within N <= 512");
            const double gap = relerr(ar.eigenvalues[0], sr.eigenvalues[0]);
            os << "g/gc=" << x << " rel-gap=" << gap
               << " abs-gap=" << std::abs(ar.eigenvalues[0] - sr.eigenvalues[0]) << "; ";
            expect(r, gap < prev, gap, "relative ground-level gap not decreasing");
            prev = gap;
        }
        r.detail = os.str();
    });
}

// ------------------------------ corners ------------------------------------

void suite_corners(Harness& h) {
    h.run("corners/g0_spectrum", [&](CheckResult& r) {
        RabiParams p = kUnit;
        p.g = 0.0;
        const ConvergedSpectrum num = converged_spectrum(
            [&](int N) { return build_H_SR(p, N); }, 8, 1e-10, 32, 256);
        expect(r, num.report.converged, 0.0, "g=0 oracle did not converge");
        std::vector<double> want;
        for (int n = 0; n <= 8; ++n) {
            want.push_back(p.omega_c * n - 0.5 * p.omega_a);
            want.push_back(p.omega_c * n + 0.5 * p.omega_a);
        }
        std::sort(want.begin(), want.end());
        for (std::size_t i = 0; i < 8; ++i)
            expect(r, std::abs(num.eigenvalues[i] - want[i]) <= 1e-10,
                   std::abs(num.eigenvalues[i] - want[i]), "g=0 level mismatch");
    });

    h.run("corners/displaced_oscillator", [&](CheckResult& r) {
        RabiParams p{1.0, 0.0, 0.6, 0.0, 1.0};
        const ConvergedSpectrum num = converged_spectrum(
            [&](int N) { return build_H_SR(p, N); }, 6, 1e-9, 32, 512);
        expect(r, num.report.converged, 0.0, "omega_a=0 oracle did not converge");
        const double shift = p.g * p.g / (p.hbar * p.omega_c);
        for (std::size_t i = 0; i < 6; ++i) {
            const double want = p.hbar * p.omega_c * double(i / 2) - shift;
            expect(r, relerr(num.eigenvalues[i], want) <= 1e-8,
                   relerr(num.eigenvalues[i], want),
                   "displaced-oscillator level mismatch");
        }
    });

    h.run("corners/ar_displaced_split", [&](CheckResult& r) {
        // omega_a = 0 decouples the sigma_x sectors: levels omega_c n - g^2/omega_c +- eps
        RabiParams p{1.0, 0.0, 0.6, 0.0, 1.0};
        const double eps = 0.1;
        const ConvergedSpectrum num = converged_spectrum(
            [&](int N) { return build_H_AR(p, eps, N); }, 6, 1e-9, 32, 512);
        expect(r, num.report.converged, 0.0, "omega_a=0 AR oracle did not converge");
        std::vector<double> want;
        const double shift = p.g * p.g / (p.hbar * p.omega_c);
        for (int n = 0; n < 6; ++n) {
            want.push_back(p.hbar * p.omega_c * n - shift - eps);
            want.push_back(p.hbar * p.omega_c * n - shift + eps);
        }
        std::sort(want.begin(), want.end());
        for (std::size_t i = 0; i < 6; ++i)
            expect(r, relerr(num.eigenvalues[i], want[i]) <= 1e-8,
                   relerr(num.eigenvalues[i], want[i]), "AR split level mismatch");
    });
}

// ------------------------------- phase -------------------------------------

void suite_phase(Harness& h) {
    h.run("phase/grid_topology", [&](CheckResult& r) {
        const int nk = 200, ng = 200;
        const double k_lo = 0.1, k_hi = 4.0, g_lo = 0.1, g_hi = 3.0;
        const std::vector<PhasePoint> grid = grid_scan(k_lo, k_hi, g_lo, g_hi, nk, ng);
        const double dg = (g_hi - g_lo) / (ng - 1);
        std::vector<bool> column_has_sp(nk, false);
        for (int i = 0; i < nk; ++i) {
            int transitions = 0;
            bool seen_sp = false;
            for (int j = 0; j < ng; ++j) {
                const PhasePoint& pt = grid[static_cast<std::size_t>(i) * ng + j];
                if (pt.region == Region::superradiant) {
                    if (!seen_sp) ++transitions;
                    seen_sp = true;
                } else {
                    expect(r, !seen_sp, 0.0,
                           "superradiant region not contiguous in a kappa column");
                }
            }
            column_has_sp[static_cast<std::size_t>(i)] = seen_sp;
            expect(r, transitions <= 1, double(transitions),
                   "more than one crossing per column");
            const double bc = boundary_curve(grid[static_cast<std::size_t>(i) * ng].kappa);
            if (bc <= g_hi - dg)
                expect(r, seen_sp, bc, "column above the boundary has no sp points");
            if (bc > g_hi + dg)
                expect(r, !seen_sp, bc, "column below the boundary shows sp points");
        }
        // connected region: sp columns form one contiguous kappa interval
        int blocks = 0;
        for (int i = 0; i < nk; ++i)
            if (column_has_sp[static_cast<std::size_t>(i)] &&
                (i == 0 || !column_has_sp[static_cast<std::size_t>(i) - 1]))
                ++blocks;
        expect(r, blocks == 1, double(blocks), "superradiant region not connected");
    });

    h.run("phase/boundary_minimum", [&](CheckResult& r) {
        const int nk = 200, ng = 200;
        const double k_lo = 0.1, k_hi = 4.0, g_lo = 0.1, g_hi = 3.0;
        const std::vector<PhasePoint> grid = grid_scan(k_lo, k_hi, g_lo, g_hi, nk, ng);
        const double dk = (k_hi - k_lo) / (nk - 1);
        const double dg = (g_hi - g_lo) / (ng - 1);
        // first superradiant g per column; because g is quantized the minimum
        // is attained on a kappa interval, which must bracket kappa = 1
        std::vector<double> first_sp(static_cast<std::size_t>(nk), 1e300);
        double best_g = 1e300;
        for (int i = 0; i < nk; ++i)
            for (int j = 0; j < ng; ++j) {
                const PhasePoint& pt = grid[static_cast<std::size_t>(i) * ng + j];
                if (pt.region == Region::superradiant) {
                    first_sp[static_cast<std::size_t>(i)] = pt.g_over_gc;
                    best_g = std::min(best_g, pt.g_over_gc);
                    break;
                }
            }
        double k_low = 1e300, k_high = -1e300;
        for (int i = 0; i < nk; ++i)
            if (first_sp[static_cast<std::size_t>(i)] <= best_g + 0.5 * dg) {
                const double kappa = grid[static_cast<std::size_t>(i) * ng].kappa;
                k_low = std::min(k_low, kappa);
                k_high = std::max(k_high, kappa);
            }
        expect(r, k_low - 2.0 * dk <= 1.0 && 1.0 <= k_high + 2.0 * dk,
               std::min(std::abs(k_low - 1.0), std::abs(k_high - 1.0)),
               "boundary minimum not at kappa = 1");
        expect(r, std::abs(best_g - 1.0) <= 2.0 * dg, std::abs(best_g - 1.0),
               "boundary minimum not at g/g_c = 1");
    });

    h.run("phase/roots_on_boundary", [&](CheckResult& r) {
        for (const RabiParams& p : parameter_sets()) {
            const double gc = critical_coupling(p.omega_a, p.omega_c, p.hbar);
            for (double x : {1.2, 1.6, 2.0}) {
                const double g = x * gc;
                const CriticalRoots roots = critical_k(g, p);
                for (double k : {roots.k_minus, roots.k_plus}) {
                    const PhasePoint pt = classify(g, k, p);
                    expect(r, pt.region == Region::boundary,
                           std::abs(pt.epsilon_gap_sq),
                           "critical root not classified as boundary");
                }
                expect(r, classify(g, 0.5 * roots.k_minus, p).region == Region::normal,
                       0.0, "inside point misclassified");
                expect(r, classify(g, 0.5 * (roots.k_minus + roots.k_plus), p).region ==
                           Region::superradiant,
                       0.0, "between-roots point misclassified");
            }
        }
    });

    h.run("phase/universality", [&](CheckResult& r) {
        const RabiParams p1 = kUnit;
        RabiParams p2 = kUnit;
        p2.omega_a = 4.0;
        p2.omega_c = 0.25;
        for (double kappa : {0.3, 0.8, 1.0, 1.7, 3.2}) {
            for (double x : {0.4, 0.9, 1.1, 1.8, 2.6}) {
                Region want = classify_reduced(kappa, x).region;
                for (const RabiParams& p : {p1, p2}) {
                    const double gc = critical_coupling(p.omega_a, p.omega_c, p.hbar);
                    const double k = 0.5 * kappa * std::sqrt(p.omega_c / p.omega_a);
                    const PhasePoint pt = classify(x * gc, k, p);
                    expect(r, pt.region == want, 0.0,
                           "classification not universal in reduced variables");
                }
            }
        }
    });
}

} // namespace

std::vector<std::string> validation_suites() {
    return {"algebra", "bogoliubov", "limits", "spectrum", "asymptotics",
            "oracle", "displacement", "asymmetric", "corners", "phase"};
}

std::vector<CheckResult> run_validation(const ValidateOptions& opts) {
    Harness h(opts);
    suite_algebra(h);
    suite_bogoliubov(h);
    suite_limits(h);
    suite_spectrum(h);
    suite_asymptotics(h);
    suite_oracle(h);
    suite_displacement(h);
    suite_asymmetric(h);
    suite_corners(h);
    suite_phase(h);
    return h.results;
}

} // namespace rabi
