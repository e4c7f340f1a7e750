// test_fock.cpp — Fock-space builders and the convergence driver

#include <cmath>

#include <doctest.h>

#include "rabi/eigen.hpp"
#include "rabi/fock.hpp"

using namespace rabi;

namespace {
const RabiParams unit{1.0, 1.0, 0.0, 0.0, 1.0};
}

TEST_CASE("ladder matrices") {
    auto [a, a_dag] = ladder_matrices(2);
    CHECK(a.dim() == 3);
    CHECK(a(0, 1) == 1.0);
    CHECK(a(1, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(a(1, 0) == 0.0);
    CHECK(a_dag(1, 0) == 1.0);
    CHECK_THROWS_AS(ladder_matrices(0), DomainError);

    // [a, a†] = I away from the truncation corner
    const int N = 20;
    auto [b, b_dag] = ladder_matrices(N);
    const OperatorMatrix comm = b * b_dag - b_dag * b;
    for (int i = 0; i < N; ++i)
        CHECK(comm(i, i) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(comm(N, N) == doctest::Approx(-static_cast<double>(N)).epsilon(1e-12));
}

TEST_CASE("squeezed annihilator") {
    const int N = 8;
    SUBCASE("r = 0 reduces to a") {
        const OperatorMatrix B = squeezed_annihilator(N, 0.0);
        auto [a, a_dag] = ladder_matrices(N);
        CHECK((B - a).max_abs() == 0.0);
    }
    SUBCASE("entries at r = 1") {
        const OperatorMatrix B = squeezed_annihilator(N, 1.0);
        CHECK(B(0, 1) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
        CHECK(B(1, 0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
        CHECK(B(1, 2) == doctest::Approx(std::sqrt(2.0) * std::cosh(1.0)).epsilon(1e-15));
    }
    SUBCASE("B + B† = e^r (a + a†)") {
        const double r = 0.7;
        const OperatorMatrix B = squeezed_annihilator(N, r);
        auto [a, a_dag] = ladder_matrices(N);
        const OperatorMatrix lhs = B + B.transpose();
        const OperatorMatrix rhs = std::exp(r) * (a + a_dag);
        CHECK((lhs - rhs).max_abs() <= 1e-14);
    }
}

TEST_CASE("H_MJC") {
    ModelParams p;
    p.omega_c = 1.0;
    p.omega_a = 0.6;
    SUBCASE("Omega = 0 is diagonal with n ± omega_a/2") {
        const OperatorMatrix H = build_H_MJC(p, 6);
        CHECK(H.symmetry_residual() == 0.0);
        const std::vector<double> ev = eigenvalues_sym(H);
        CHECK(ev[0] == doctest::Approx(-0.3).epsilon(1e-14));
        CHECK(ev[1] == doctest::Approx(0.3).epsilon(1e-14));
        CHECK(ev[2] == doctest::Approx(0.7).epsilon(1e-13));
    }
    SUBCASE("r = 0 gives the Jaynes-Cummings doublets") {
        p.omega_a = 1.0;
        p.Omega = 0.4;
        const OperatorMatrix H = build_H_MJC(p, 40);
        const std::vector<double> ev = eigenvalues_sym(H);
        // resonant doublet from |e,0>, |g,1>: 1/2 ± Omega/2... in units
        // hbar = 1: E± = omega_c/2 ± Omega/2 for the first excited pair
        CHECK(ev[0] == doctest::Approx(-0.5).epsilon(1e-13));
        CHECK(ev[1] == doctest::Approx(0.5 - 0.2).epsilon(1e-13));
        CHECK(ev[2] == doctest::Approx(0.5 + 0.2).epsilon(1e-13));
    }
    SUBCASE("finite r turns on the counter-rotating block") {
        p.Omega = 0.4;
        p.r = 1.0;
        const OperatorMatrix H = build_H_MJC(p, 10);
        CHECK(H.symmetry_residual() == 0.0);
        // sigma_- a coupling: <g,0|H|e,1>
        CHECK(H(11, 1) == doctest::Approx(0.2 * std::sinh(1.0)).epsilon(1e-14));
    }
}

TEST_CASE("H_SR") {
    RabiParams p = unit;
    SUBCASE("g = 0 spectrum") {
        const std::vector<double> ev = eigenvalues_sym(build_H_SR(p, 12));
        CHECK(ev[0] == doctest::Approx(-0.5).epsilon(1e-13));
        CHECK(ev[1] == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(ev[2] == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(ev[3] == doctest::Approx(1.5).epsilon(1e-13));
    }
    SUBCASE("parity symmetry: [H, P] = 0") {
        p.g = 0.7;
        const OperatorMatrix H = build_H_SR(p, 16);
        const OperatorMatrix P = parity_operator(16);
        CHECK((H * P - P * H).max_abs() <= 1e-13);
    }
    SUBCASE("symmetry residual") {
        p.g = 1.3;
        CHECK(build_H_SR(p, 24).symmetry_residual() == 0.0);
    }
}

TEST_CASE("H_AR") {
    RabiParams p = unit;
    p.g = 0.4;
    SUBCASE("eps = 0 reduces to H_SR") {
        CHECK((build_H_AR(p, 0.0, 12) - build_H_SR(p, 12)).max_abs() == 0.0);
    }
    SUBCASE("the asymmetry breaks parity") {
        const OperatorMatrix H = build_H_AR(p, 0.3, 12);
        const OperatorMatrix P = parity_operator(12);
        CHECK((H * P - P * H).max_abs() > 0.1);
    }
}

TEST_CASE("H_MSR") {
    RabiParams p = unit;
    p.g = 0.5;
    const int N = 12;
    SUBCASE("alpha = 0 reduces to H_SR") {
        CHECK((build_H_MSR(p, 0.0, N) - build_H_SR(p, N)).max_abs() == 0.0);
    }
    SUBCASE("entrywise difference from H_SR") {
        const double alpha = 0.8;
        auto [a, a_dag] = ladder_matrices(N);
        const std::size_t dim = 2 * (static_cast<std::size_t>(N) + 1);
        OperatorMatrix extra(dim, N);
        for (int s = 0; s < 2; ++s)
            for (int n = 0; n <= N; ++n) {
                const std::size_t i = s * (N + 1) + n;
                extra(i, i) += alpha * alpha;  // hbar omega_c alpha^2
                if (n < N) {
                    const double root = std::sqrt(static_cast<double>(n + 1));
                    extra(i, i + 1) += alpha * root;  // hbar omega_c alpha (a + a†)
                    extra(i + 1, i) += alpha * root;
                }
            }
        for (int n = 0; n <= N; ++n) {
            extra(n, N + 1 + n) += 2.0 * p.g * alpha;  // 2 g alpha sigma_x
            extra(N + 1 + n, n) += 2.0 * p.g * alpha;
        }
        CHECK((build_H_MSR(p, alpha, N) - build_H_SR(p, N) - extra).max_abs() <= 1e-14);
    }
}

TEST_CASE("H_quadratic") {
    SUBCASE("C = 0 is diagonal") {
        const OperatorMatrix H = build_H_quadratic({2.0, -1.0, 0.0}, 5);
        CHECK(H.dim() == 6);
        for (int n = 0; n <= 5; ++n)
            CHECK(H(n, n) == doctest::Approx(2.0 * n - 1.0).epsilon(1e-15));
        CHECK(H(0, 2) == 0.0);
    }
    SUBCASE("off-diagonal entries") {
        const OperatorMatrix H = build_H_quadratic({1.0, 0.0, 0.5}, 6);
        CHECK(H(0, 0) == 0.5);
        CHECK(H(0, 2) == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-15));
        CHECK(H(1, 3) == doctest::Approx(0.5 * std::sqrt(6.0)).epsilon(1e-15));
        CHECK(H(0, 1) == 0.0);
        CHECK(H.symmetry_residual() == 0.0);
    }
}

TEST_CASE("converged spectrum") {
    SUBCASE("matches the Bogoliubov levels for A = 1, C = 2") {
        const ConvergedSpectrum s = converged_spectrum(
            [](int N) { return build_H_quadratic({1.0, 0.0, 2.0}, N); }, 3, 1e-8, 32, 2048);
        REQUIRE(s.report.converged);
        CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(s.eigenvalues[1] == doctest::Approx(4.0).epsilon(1e-6));
        CHECK(s.eigenvalues[2] == doctest::Approx(7.0).epsilon(1e-6));
    }
    SUBCASE("already converged at N0 for a diagonal builder") {
        const ConvergedSpectrum s = converged_spectrum(
            [](int N) { return build_H_quadratic({1.0, 0.0, 0.0}, N); }, 4, 1e-10, 32, 256);
        REQUIRE(s.report.converged);
        CHECK(s.report.N_final == 64);
        CHECK(s.eigenvalues[3] == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("unbounded-below input is flagged as diverging") {
        const ConvergedSpectrum s = converged_spectrum(
            [](int N) { return build_H_quadratic({1.0, 0.0, -0.5}, N); }, 2, 1e-8, 32, 2048);
        CHECK_FALSE(s.report.converged);
        CHECK(s.report.diverging);
        CHECK(s.report.N_final < 2048);
    }
    SUBCASE("argument validation") {
        auto b = [](int N) { return build_H_quadratic({1.0, 0.0, 0.0}, N); };
        CHECK_THROWS_AS(converged_spectrum(b, 0), DomainError);
        CHECK_THROWS_AS(converged_spectrum(b, 30, 1e-8, 32, 2048), DomainError);
        CHECK_THROWS_AS(converged_spectrum(b, 2, -1.0, 32, 2048), DomainError);
        CHECK_THROWS_AS(converged_spectrum(b, 2, 1e-8, 64, 32), DomainError);
    }
}
