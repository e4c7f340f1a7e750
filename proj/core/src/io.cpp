// io.cpp

#include "rabi/io.hpp"

#include <cstdio>

namespace rabi {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_matrix_csv(std::ostream& os, const OperatorMatrix& M) {
    os << "# dim=" << M.dim() << ",truncation=" << M.truncation() << "\n";
    for (std::size_t i = 0; i < M.dim(); ++i) {
        for (std::size_t j = 0; j < M.dim(); ++j) {
            if (j) os << ',';
            os << fmt17(M(i, j));
        }
        os << "\n";
    }
}

void write_spectrum_csv(std::ostream& os, const std::vector<double>& values) {
    os << "level,value\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        os << i << ',' << fmt17(values[i]) << "\n";
}

} // namespace rabi
