// eigen.cpp — Householder tridiagonalization + implicit-shift QL

#include "rabi/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rabi/errors.hpp"

namespace rabi {

namespace {

// Reduces the symmetric matrix stored in z (row-major, n x n) to tridiagonal
// form; diagonal in d, subdiagonal in e[1..n-1]. When accumulate is set, z is
// overwritten with the orthogonal transformation so that eigenvectors of the
// tridiagonal matrix can be rotated back.
void householder_tridiag(std::vector<double>& z, std::size_t n,
                         std::vector<double>& d, std::vector<double>& e,
                         bool accumulate) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return z[i * n + j]; };

    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (std::size_t k = 0; k < i; ++k) scale += std::abs(at(i, k));
            if (scale == 0.0) {
                e[i] = at(i, l);
            } else {
                for (std::size_t k = 0; k < i; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j < i; ++j) {
                    if (accumulate) at(j, i) = at(i, j) / h;
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (std::size_t k = j + 1; k < i; ++k) g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                const double hh = f / (h + h);
                for (std::size_t j = 0; j < i; ++j) {
                    f = at(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (std::size_t k = 0; k <= j; ++k)
                        at(j, k) -= f * e[k] + g * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
        d[i] = h;
    }
    if (accumulate) d[0] = 0.0;
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (accumulate) {
            if (d[i] != 0.0) {
                for (std::size_t j = 0; j < i; ++j) {
                    double g = 0.0;
                    for (std::size_t k = 0; k < i; ++k) g += at(i, k) * at(k, j);
                    for (std::size_t k = 0; k < i; ++k) at(k, j) -= g * at(k, i);
                }
            }
            d[i] = at(i, i);
            at(i, i) = 1.0;
            for (std::size_t j = 0; j < i; ++j) at(j, i) = at(i, j) = 0.0;
        } else {
            d[i] = at(i, i);
        }
    }
}

// Implicit-shift QL on a tridiagonal matrix (d diagonal, e subdiagonal shifted
// to e[0..n-2]). Rotations are applied to the columns of z when present.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                       std::size_t n, std::vector<double>* z) {
    constexpr int kMaxIter = 60;
    const double eps = std::numeric_limits<double>::epsilon();

    for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == kMaxIter)
                    throw ConvergenceFailure(
                        "eigen_sym: QL iteration cap exceeded at eigenvalue " +
                        std::to_string(l) + " (dim " + std::to_string(n) + ")");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (std::size_t k = 0; k < n; ++k) {
                            f = (*z)[k * n + i + 1];
                            (*z)[k * n + i + 1] = s * (*z)[k * n + i] + c * f;
                            (*z)[k * n + i] = c * (*z)[k * n + i] - s * f;
                        }
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

std::vector<double> symmetrized_copy(const OperatorMatrix& M) {
    const std::size_t n = M.dim();
    const double scale = M.max_abs();
    if (M.symmetry_residual() > 1e-12 * std::max(scale, 1e-300))
        throw DomainError("eigen_sym: input matrix is not symmetric");
    std::vector<double> z(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            z[i * n + j] = 0.5 * (M(i, j) + M(j, i));
    return z;
}

} // namespace

std::vector<double> eigenvalues_sym(const OperatorMatrix& M, double /*tol*/) {
    const std::size_t n = M.dim();
    std::vector<double> z = symmetrized_copy(M);
    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) {
        d[0] = z[0];
    } else {
        householder_tridiag(z, n, d, e, false);
        ql_implicit_shift(d, e, n, nullptr);
    }
    std::sort(d.begin(), d.end());
    return d;
}

EigenDecomposition eigen_sym(const OperatorMatrix& M, double tol) {
    if (tol <= 0) throw DomainError("eigen_sym: tol must be > 0");
    const std::size_t n = M.dim();
    std::vector<double> z = symmetrized_copy(M);
    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) {
        d[0] = z[0];
        z[0] = 1.0;
    } else {
        householder_tridiag(z, n, d, e, true);
        ql_implicit_shift(d, e, n, &z);
    }

    // sort ascending, permuting eigenvector columns along
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = OperatorMatrix(n, M.truncation());
    for (std::size_t c = 0; c < n; ++c) {
        out.eigenvalues[c] = d[order[c]];
        for (std::size_t row = 0; row < n; ++row)
            out.eigenvectors(row, c) = z[row * n + order[c]];
    }

    const double norm = M.frobenius_norm();
    double worst = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                acc += M(i, j) * out.eigenvectors(j, c);
            acc -= out.eigenvalues[c] * out.eigenvectors(i, c);
            res += acc * acc;
        }
        worst = std::max(worst, std::sqrt(res));
    }
    out.residual_norm = norm > 0 ? worst / norm : worst;
    if (out.residual_norm > tol * static_cast<double>(n))
        throw ConvergenceFailure("eigen_sym: residual exceeds tolerance");
    return out;
}

} // namespace rabi
