// test_cli.cpp — drives the installed CLI binary end to end

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#ifndef RABI_CLI_BIN
#error "RABI_CLI_BIN must point at the CLI executable"
#endif

namespace {

struct RunResult {
    int code{-1};
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string("'") + RABI_CLI_BIN + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Splits CSV output into non-comment lines.
std::vector<std::string> csv_lines(const std::string& out) {
    std::vector<std::string> lines;
    std::istringstream is(out);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    return lines;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(item);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

} // namespace

TEST_CASE("spectrum: uncoupled sr levels") {
    const RunResult r = run_cli("spectrum --model sr --levels 3");
    REQUIRE(r.code == 0);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "m,n,k_sq,E,gap");
    const auto row0 = fields(lines[1]);
    REQUIRE(row0.size() == 5);
    CHECK(std::stod(row0[3]) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(std::stod(row0[4]) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::stod(fields(lines[3])[3]) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("spectrum: quadratic model leaves n and k_sq empty") {
    const RunResult r = run_cli("spectrum --model quadratic --A 1 --B 0 --C 2 --levels 3");
    REQUIRE(r.code == 0);
    const auto lines = csv_lines(r.out);
    const auto row = fields(lines[1]);
    REQUIRE(row.size() == 5);
    CHECK(row[1].empty());
    CHECK(row[2].empty());
    CHECK(std::stod(row[3]) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::stod(fields(lines[3])[3]) == doctest::Approx(7.0).epsilon(1e-14));
}

TEST_CASE("spectrum: superradiant parameters exit 2") {
    CHECK(run_cli("spectrum --model sr --g 1 --k 1").code == 2);
}

TEST_CASE("spectrum: boundary parameters report a zero gap") {
    const RunResult r = run_cli("spectrum --model sr --g 0.5 --k 0.5 --levels 2");
    REQUIRE(r.code == 0);
    const auto lines = csv_lines(r.out);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(std::stod(fields(lines[i])[4]) == 0.0);
        CHECK(std::stod(fields(lines[i])[3]) == doctest::Approx(-0.75).epsilon(1e-14));
    }
}

TEST_CASE("spectrum: json output carries the schema tag") {
    const RunResult r = run_cli("spectrum --model sr --levels 2 --format json");
    REQUIRE(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["config"]["model"] == "sr");
    REQUIRE(j["results"].size() == 2);
    CHECK(j["results"][0]["E"].get<double>() == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("oracle: agrees with the closed form for a quadratic model") {
    const RunResult r = run_cli("oracle --model quadratic --A 1 --B 0 --C 2 --levels 3");
    REQUIRE(r.code == 0);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "level,E");
    CHECK(std::stod(fields(lines[1])[1]) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::stod(fields(lines[3])[1]) == doctest::Approx(7.0).epsilon(1e-6));
}

TEST_CASE("oracle: unbounded-below spectrum exits 3") {
    CHECK(run_cli("oracle --model quadratic --A 1 --B 0 --C -0.5 --levels 2").code == 3);
}

TEST_CASE("compare: quadratic closed form vs oracle") {
    const RunResult r = run_cli("compare --model quadratic --A 1 --B 0 --C 0.4 --levels 4");
    REQUIRE(r.code == 0);
    const std::string marker = "# max_rel_err=";
    const std::size_t pos = r.out.find(marker);
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(r.out.substr(pos + marker.size())) <= 1e-6);
}

TEST_CASE("phase: boundary curve") {
    const RunResult r = run_cli("phase --curve boundary --kappa 0.5:2:0.5");
    REQUIRE(r.code == 0);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "kappa,g_over_gc");
    CHECK(std::stod(fields(lines[1])[1]) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(std::stod(fields(lines[2])[1]) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::stod(fields(lines[4])[1]) == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("phase: branch product is one") {
    const RunResult r = run_cli("phase --branches --g-over-gc 1:2:0.25");
    REQUIRE(r.code == 0);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() >= 2);
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(std::stod(fields(lines[i])[3]) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("phase: grid rows") {
    const RunResult r = run_cli("phase --grid --kappa 0.5:1:0.5 --g-over-gc 0.5:0.9:0.2");
    REQUIRE(r.code == 0);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "kappa,g_over_gc,region,epsilon_gap_sq");
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(fields(lines[i])[2] == "np");
}

TEST_CASE("validate: single suite passes, injection fails") {
    const RunResult ok = run_cli("validate --only algebra");
    CHECK(ok.code == 0);
    const nlohmann::json j = nlohmann::json::parse(ok.out);
    CHECK(j["schema"] == 1);
    CHECK(j["diagnostics"]["failed"] == 0);
    CHECK(run_cli("validate --only algebra --inject-error").code == 1);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run_cli("spectrum --no-such-flag").code == 64);
    CHECK(run_cli("").code == 64);
    CHECK(run_cli("spectrum --model msr").code == 64);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("output is byte-identical across runs") {
    const std::string args = "spectrum --model sr --g 0.3 --k 0.2 --levels 6";
    CHECK(run_cli(args).out == run_cli(args).out);
}
