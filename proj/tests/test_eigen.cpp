// test_eigen.cpp — dense symmetric eigensolver

#include <cmath>
#include <random>

#include <doctest.h>

#include "rabi/eigen.hpp"

using namespace rabi;

TEST_CASE("1x1 and diagonal input") {
    OperatorMatrix one(1, 0);
    one(0, 0) = -3.5;
    const EigenDecomposition d1 = eigen_sym(one);
    CHECK(d1.eigenvalues == std::vector<double>{-3.5});
    CHECK(std::abs(d1.eigenvectors(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));

    OperatorMatrix diag(4, 0);
    const double vals[4] = {2.0, -1.0, 7.0, 0.5};
    for (std::size_t i = 0; i < 4; ++i) diag(i, i) = vals[i];
    const std::vector<double> ev = eigenvalues_sym(diag);
    CHECK(ev == std::vector<double>{-1.0, 0.5, 2.0, 7.0});
}

TEST_CASE("2x2 frozen example") {
    OperatorMatrix m(2, 0);
    m(0, 0) = 2.0;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    m(1, 1) = 2.0;
    const EigenDecomposition d = eigen_sym(m);
    CHECK(d.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(d.residual_norm <= 1e-14);
}

TEST_CASE("random 60x60: reconstruction, orthonormality, trace") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const std::size_t n = 60;
    OperatorMatrix m(n, 0);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double x = dist(rng);
            m(i, j) = x;
            m(j, i) = x;
            if (i == j) trace += x;
        }
    const EigenDecomposition d = eigen_sym(m);
    CHECK(d.residual_norm <= 1e-12);
    double trace_ev = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(d.eigenvalues[i] <= d.eigenvalues[i + 1]);
    for (double ev : d.eigenvalues) trace_ev += ev;
    CHECK(trace_ev == doctest::Approx(trace).epsilon(1e-11));
    // V^T V = I
    const OperatorMatrix gram = d.eigenvectors.transpose() * d.eigenvectors;
    CHECK((gram - identity_matrix(n)).max_abs() <= 1e-12);
    // fast path agrees with the full path
    const std::vector<double> ev_only = eigenvalues_sym(m);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(ev_only[i] == doctest::Approx(d.eigenvalues[i]).epsilon(1e-11));
}

TEST_CASE("asymmetric input is rejected") {
    OperatorMatrix m(3, 0);
    m(0, 1) = 1.0;
    m(1, 0) = 0.5;
    CHECK_THROWS_AS(eigen_sym(m), DomainError);
    CHECK_THROWS_AS(eigenvalues_sym(m), DomainError);
}

TEST_CASE("degenerate spectrum") {
    // 3x3 with a double eigenvalue: diag(1,1,2) conjugated by a rotation
    OperatorMatrix m(3, 0);
    m(0, 0) = 1.5;
    m(0, 2) = 0.5;
    m(2, 0) = 0.5;
    m(2, 2) = 1.5;
    m(1, 1) = 1.0;
    const EigenDecomposition d = eigen_sym(m);
    CHECK(d.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(d.residual_norm <= 1e-13);
}
