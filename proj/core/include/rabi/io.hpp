// io.hpp — CSV export and fixed-width numeric formatting

#pragma once

#include <ostream>
#include <string>

#include "rabi/matrix.hpp"

namespace rabi {

// 17 significant digits; round-trips any double.
std::string fmt17(double x);

// Row-major CSV dump with a header line carrying dim and truncation.
void write_matrix_csv(std::ostream& os, const OperatorMatrix& M);

// One value per line under a `level,value` header.
void write_spectrum_csv(std::ostream& os, const std::vector<double>& values);

} // namespace rabi
