// test_validate.cpp — validation harness plumbing (the full suite runs in
// the acceptance binary)

#include <algorithm>

#include <doctest.h>

#include "rabi/validate.hpp"

using namespace rabi;

namespace {
bool all_passed(const std::vector<CheckResult>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const CheckResult& r) { return r.passed; });
}
} // namespace

TEST_CASE("suite registry") {
    const std::vector<std::string> suites = validation_suites();
    for (const char* s : {"algebra", "bogoliubov", "limits", "spectrum", "asymptotics",
                          "oracle", "displacement", "asymmetric", "corners", "phase"})
        CHECK(std::find(suites.begin(), suites.end(), s) != suites.end());
}

TEST_CASE("cheap suites pass and are named suite/check") {
    for (const char* s : {"algebra", "bogoliubov", "spectrum", "limits"}) {
        ValidateOptions opts;
        opts.only = s;
        const std::vector<CheckResult> rs = run_validation(opts);
        REQUIRE_FALSE(rs.empty());
        CHECK(all_passed(rs));
        for (const CheckResult& r : rs)
            CHECK(r.name.rfind(std::string(s) + "/", 0) == 0);
    }
}

TEST_CASE("only filter is exact, not a prefix match") {
    ValidateOptions opts;
    opts.only = "alg";
    CHECK(run_validation(opts).empty());
    opts.only = "no-such-suite";
    CHECK(run_validation(opts).empty());
}

TEST_CASE("injected sign error is caught by the algebra suite") {
    ValidateOptions opts;
    opts.only = "algebra";
    opts.inject_error = true;
    const std::vector<CheckResult> rs = run_validation(opts);
    REQUIRE_FALSE(rs.empty());
    CHECK_FALSE(all_passed(rs));
}

TEST_CASE("results are deterministic for a fixed seed") {
    ValidateOptions opts;
    opts.only = "algebra";
    const auto a = run_validation(opts);
    const auto b = run_validation(opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].metric == b[i].metric);
    }
}
