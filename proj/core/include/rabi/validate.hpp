// validate.hpp — Executable invariant suites covering the closed-form,
// oracle, and phase modules. Used by the CLI `validate` command and the
// acceptance harness.

#pragma once

#include <string>
#include <vector>

namespace rabi {

struct CheckResult {
    std::string name;     // "suite/check"
    bool passed{false};
    double metric{0.0};   // worst observed error or ratio, check-specific
    std::string detail;
};

struct ValidateOptions {
    bool inject_error{false};  // flips the sign of C on the closed-form side;
                               // a correct build must then fail
    std::string only;          // run a single suite; empty = all
    double oracle_tol{1e-8};   // truncation-convergence tolerance
    unsigned seed{20250311};
};

// Suite names accepted by ValidateOptions::only.
std::vector<std::string> validation_suites();

std::vector<CheckResult> run_validation(const ValidateOptions& opts = {});

} // namespace rabi
