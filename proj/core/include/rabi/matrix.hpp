// matrix.hpp — Dense real square matrices for truncated Fock-space operators

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "rabi/errors.hpp"

namespace rabi {

// Dense real square matrix, row-major. `truncation` records the max Fock
// occupation N the matrix was built with (dim = N+1 or 2(N+1)).
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    OperatorMatrix(std::size_t dim, int truncation)
        : dim_(dim), truncation_(truncation), data_(dim * dim, 0.0) {
        if (dim == 0) throw DomainError("OperatorMatrix: dim must be > 0");
    }

    std::size_t dim() const { return dim_; }
    int truncation() const { return truncation_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    const std::vector<double>& data() const { return data_; }

    double max_abs() const {
        double m = 0.0;
        for (double x : data_) m = std::max(m, std::abs(x));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double x : data_) s += x * x;
        return std::sqrt(s);
    }

    // max_{i,j} |M[i][j] - M[j][i]|
    double symmetry_residual() const {
        double m = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    OperatorMatrix transpose() const {
        OperatorMatrix t(dim_, truncation_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

private:
    std::size_t dim_{0};
    int truncation_{0};
    std::vector<double> data_;
};

inline OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw DomainError("matrix product: dimension mismatch");
    const std::size_t n = a.dim();
    OperatorMatrix c(n, a.truncation());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

inline OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw DomainError("matrix difference: dimension mismatch");
    OperatorMatrix c(a.dim(), a.truncation());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            c(i, j) = a(i, j) - b(i, j);
    return c;
}

inline OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw DomainError("matrix sum: dimension mismatch");
    OperatorMatrix c(a.dim(), a.truncation());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            c(i, j) = a(i, j) + b(i, j);
    return c;
}

inline OperatorMatrix operator*(double s, const OperatorMatrix& a) {
    OperatorMatrix c(a.dim(), a.truncation());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            c(i, j) = s * a(i, j);
    return c;
}

inline OperatorMatrix identity_matrix(std::size_t dim, int truncation = 0) {
    OperatorMatrix id(dim, truncation);
    for (std::size_t i = 0; i < dim; ++i) id(i, i) = 1.0;
    return id;
}

} // namespace rabi
