// rabi_cli.cpp — command-line front end: closed-form spectra, oracle runs,
// comparisons, phase maps, and the validation suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rabi/closed_form.hpp"
#include "rabi/eigen.hpp"
#include "rabi/fock.hpp"
#include "rabi/io.hpp"
#include "rabi/phase.hpp"
#include "rabi/validate.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitPhaseDomain = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitUsage = 64;

double default_tolerance() {
    if (const char* env = std::getenv("RABI_SPECTRA_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring unparsable RABI_SPECTRA_TOL\n";
    }
    return 1e-8;
}

// "start:stop:step" inclusive of stop up to half a step
std::vector<double> parse_range(const std::string& s) {
    std::vector<double> out;
    double a = 0, b = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (is >> a >> c1 >> b >> c2 >> step && c1 == ':' && c2 == ':' && step > 0 && b >= a) {
        for (double x = a; x <= b + 0.5 * step; x += step) out.push_back(x);
        return out;
    }
    throw rabi::DomainError("bad range '" + s + "', expected start:stop:step");
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ','))
        out.push_back(std::stod(item));
    if (out.empty()) throw rabi::DomainError("empty list '" + s + "'");
    return out;
}

struct RunConfig {
    std::string model{"sr"};
    rabi::ModelParams mjc;
    rabi::RabiParams rp;
    rabi::QuadraticCoefficients quad{1.0, 0.0, 0.0};
    double eps_asym{0.0};
    double alpha{0.0};
    int levels{8};
    double tol{default_tolerance()};
    int N0{32};
    int cap{2048};
    std::string format{"csv"};
    bool reduced{false};

    json to_json() const {
        json j;
        j["model"] = model;
        j["levels"] = levels;
        j["tol"] = tol;
        j["N0"] = N0;
        j["cap"] = cap;
        j["reduced"] = reduced;
        if (model == "quadratic") {
            j["A"] = quad.A;
            j["B"] = quad.B;
            j["C"] = quad.C;
        } else if (model == "mjc") {
            j["wc"] = mjc.omega_c;
            j["wa"] = mjc.omega_a;
            j["Omega"] = mjc.Omega;
            j["r"] = mjc.r;
            j["v"] = mjc.v;
            j["hbar"] = mjc.hbar;
        } else {
            j["wc"] = rp.omega_c;
            j["wa"] = rp.omega_a;
            j["g"] = rp.g;
            j["k"] = rp.k;
            j["hbar"] = rp.hbar;
            if (model == "ar") j["eps_asym"] = eps_asym;
            if (model == "msr") j["alpha"] = alpha;
        }
        return j;
    }
};

void add_model_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--model", cfg.model, "mjc|sr|ar|msr|quadratic")
        ->check(CLI::IsMember({"mjc", "sr", "ar", "msr", "quadratic"}));
    cmd->add_option("--wc", cfg.rp.omega_c, "cavity frequency omega_c");
    cmd->add_option("--wa", cfg.rp.omega_a, "atomic splitting omega_a");
    cmd->add_option("--g", cfg.rp.g, "coupling strength");
    cmd->add_option("--k", cfg.rp.k, "unitary parameter k");
    cmd->add_option("--hbar", cfg.rp.hbar, "action constant");
    cmd->add_option("--Omega", cfg.mjc.Omega, "Rabi frequency (mjc)");
    cmd->add_option("--r", cfg.mjc.r, "squeeze parameter (mjc)");
    cmd->add_option("--v", cfg.mjc.v, "unitary parameter v (mjc)");
    cmd->add_option("--eps-asym", cfg.eps_asym, "sigma_x bias of the asymmetric model");
    cmd->add_option("--alpha", cfg.alpha, "displacement of the msr model");
    cmd->add_option("--A", cfg.quad.A, "quadratic coefficient A");
    cmd->add_option("--B", cfg.quad.B, "quadratic coefficient B");
    cmd->add_option("--C", cfg.quad.C, "quadratic coefficient C");
    cmd->add_option("--levels", cfg.levels, "number of levels")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", cfg.tol, "convergence tolerance");
    cmd->add_option("--N0", cfg.N0, "initial truncation");
    cmd->add_option("--cap", cfg.cap, "truncation cap");
    cmd->add_option("--format", cfg.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--reduced", cfg.reduced, "report E/(hbar omega_c) and g/g_c");
}

// Copies the shared frequency flags into the mjc parameter struct.
void sync_mjc(RunConfig& cfg) {
    cfg.mjc.omega_c = cfg.rp.omega_c;
    cfg.mjc.omega_a = cfg.rp.omega_a;
    cfg.mjc.hbar = cfg.rp.hbar;
}

rabi::HamiltonianBuilder make_builder(const RunConfig& cfg) {
    if (cfg.model == "quadratic")
        return [cfg](int N) { return rabi::build_H_quadratic(cfg.quad, N); };
    if (cfg.model == "mjc")
        return [cfg](int N) { return rabi::build_H_MJC(cfg.mjc, N); };
    if (cfg.model == "ar")
        return [cfg](int N) { return rabi::build_H_AR(cfg.rp, cfg.eps_asym, N); };
    if (cfg.model == "msr")
        return [cfg](int N) { return rabi::build_H_MSR(cfg.rp, cfg.alpha, N); };
    return [cfg](int N) { return rabi::build_H_SR(cfg.rp, N); };
}

// --------------------------------- spectrum ---------------------------------

int cmd_spectrum(RunConfig& cfg) {
    sync_mjc(cfg);
    rabi::QuadraticCoefficients c;
    bool have_n = false;
    if (cfg.model == "quadratic") {
        c = cfg.quad;
    } else if (cfg.model == "mjc") {
        c = rabi::mjc_coefficients(cfg.mjc);
    } else if (cfg.model == "sr") {
        c = rabi::sr_coefficients(cfg.rp);
        have_n = true;
    } else {
        std::cerr << "error: no closed-form spectrum for model '" << cfg.model << "'\n";
        return kExitUsage;
    }

    const double gap = rabi::epsilon_gap(c);  // throws SuperradiantRegime -> exit 2
    if (gap == 0.0)
        std::cerr << "warning: parameters on the phase boundary, gap is zero\n";
    const std::vector<double> levels = rabi::effective_spectrum(c, cfg.levels - 1);
    const double escale = cfg.reduced ? cfg.rp.hbar * cfg.rp.omega_c : 1.0;
    const double ksq = cfg.rp.k * cfg.rp.k;

    if (cfg.format == "json") {
        json out;
        out["schema"] = 1;
        out["config"] = cfg.to_json();
        json rows = json::array();
        for (int m = 0; m < cfg.levels; ++m) {
            json row;
            row["m"] = m;
            if (have_n) {
                row["n"] = ksq + m;
                row["k_sq"] = ksq;
            }
            row["E"] = levels[static_cast<std::size_t>(m)] / escale;
            row["gap"] = gap / escale;
            rows.push_back(row);
        }
        out["results"] = rows;
        out["diagnostics"] = {{"region", gap > 0 ? "np" : "boundary"}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "m,n,k_sq,E,gap\n";
        for (int m = 0; m < cfg.levels; ++m) {
            std::cout << m << ',';
            if (have_n)
                std::cout << rabi::fmt17(ksq + m) << ',' << rabi::fmt17(ksq);
            else
                std::cout << ',';
            std::cout << ',' << rabi::fmt17(levels[static_cast<std::size_t>(m)] / escale)
                      << ',' << rabi::fmt17(gap / escale) << "\n";
        }
    }
    return kExitOk;
}

// ---------------------------------- oracle ----------------------------------

int cmd_oracle(RunConfig& cfg, const std::string& dump_matrix) {
    sync_mjc(cfg);
    const rabi::HamiltonianBuilder builder = make_builder(cfg);
    if (!dump_matrix.empty()) {
        std::ofstream os(dump_matrix);
        if (!os) {
            std::cerr << "error: cannot open '" << dump_matrix << "'\n";
            return kExitUsage;
        }
        rabi::write_matrix_csv(os, builder(cfg.N0));
    }
    const rabi::ConvergedSpectrum res =
        rabi::converged_spectrum(builder, cfg.levels, cfg.tol, cfg.N0, cfg.cap);
    const double escale = cfg.reduced ? cfg.rp.hbar * cfg.rp.omega_c : 1.0;

    if (cfg.format == "json") {
        json out;
        out["schema"] = 1;
        out["config"] = cfg.to_json();
        out["results"] = json::array();
        for (double e : res.eigenvalues) out["results"].push_back(e / escale);
        out["diagnostics"] = {{"N_initial", res.report.N_initial},
                              {"N_final", res.report.N_final},
                              {"converged", res.report.converged},
                              {"diverging", res.report.diverging},
                              {"level_drift", res.report.level_drift}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "# N_initial=" << res.report.N_initial
                  << ",N_final=" << res.report.N_final
                  << ",converged=" << (res.report.converged ? 1 : 0)
                  << ",diverging=" << (res.report.diverging ? 1 : 0) << "\n";
        std::cout << "level,E\n";
        for (std::size_t i = 0; i < res.eigenvalues.size(); ++i)
            std::cout << i << ',' << rabi::fmt17(res.eigenvalues[i] / escale) << "\n";
    }
    if (!res.report.converged) {
        std::cerr << (res.report.diverging
                          ? "error: spectrum unbounded below (superradiant instability)\n"
                          : "error: truncation cap hit before convergence\n");
        return kExitNoConvergence;
    }
    return kExitOk;
}

// --------------------------------- compare ----------------------------------

int cmd_compare(RunConfig& cfg, const std::string& g_over_gc_list) {
    sync_mjc(cfg);
    if (cfg.model == "ar") {
        const std::vector<double> xs =
            g_over_gc_list.empty() ? std::vector<double>{2.0, 4.0, 8.0}
                                   : parse_list(g_over_gc_list);
        const double gc = rabi::critical_coupling(cfg.rp.omega_a, cfg.rp.omega_c,
                                                  cfg.rp.hbar);
        std::cout << "g_over_gc,E_sr,E_ar,rel_err\n";
        double max_err = 0.0;
        for (double x : xs) {
            RunConfig run = cfg;
            run.rp.g = x * gc;
            run.model = "sr";
            const auto sr = rabi::converged_spectrum(make_builder(run), 1, run.tol,
                                                     std::max(run.N0, 64), run.cap);
            run.model = "ar";
            const auto ar = rabi::converged_spectrum(make_builder(run), 1, run.tol,
                                                     std::max(run.N0, 64), run.cap);
            const double err = std::abs(ar.eigenvalues[0] - sr.eigenvalues[0]) /
                               std::max(std::abs(sr.eigenvalues[0]), 1.0);
            max_err = std::max(max_err, err);
            std::cout << rabi::fmt17(x) << ',' << rabi::fmt17(sr.eigenvalues[0]) << ','
                      << rabi::fmt17(ar.eigenvalues[0]) << ',' << rabi::fmt17(err) << "\n";
        }
        std::cout << "# max_rel_err=" << rabi::fmt17(max_err) << "\n";
        return kExitOk;
    }

    rabi::QuadraticCoefficients c;
    bool nearest = false;
    rabi::HamiltonianBuilder builder;
    if (cfg.model == "quadratic") {
        c = cfg.quad;
        builder = [cfg](int N) { return rabi::build_H_quadratic(cfg.quad, N); };
    } else if (cfg.model == "mjc") {
        c = rabi::mjc_coefficients(cfg.mjc);
        builder = [c](int N) { return rabi::build_H_quadratic(c, N); };
    } else if (cfg.model == "sr") {
        // spin-down projection vs the full spin-boson spectrum
        c = rabi::sr_coefficients(cfg.rp);
        builder = [cfg](int N) { return rabi::build_H_SR(cfg.rp, N); };
        nearest = true;
    } else {
        std::cerr << "error: compare supports quadratic, mjc, sr, ar\n";
        return kExitUsage;
    }

    const std::vector<double> closed = rabi::effective_spectrum(c, cfg.levels - 1);
    const auto num = rabi::converged_spectrum(builder, nearest ? 4 * cfg.levels : cfg.levels,
                                              cfg.tol, std::max(cfg.N0, 4 * cfg.levels + 10),
                                              cfg.cap);
    std::cout << "m,closed,oracle,rel_err\n";
    double max_err = 0.0;
    for (int m = 0; m < cfg.levels; ++m) {
        const double want = closed[static_cast<std::size_t>(m)];
        double got;
        if (nearest) {
            got = num.eigenvalues[0];
            for (double e : num.eigenvalues)
                if (std::abs(e - want) < std::abs(got - want)) got = e;
        } else {
            got = num.eigenvalues[static_cast<std::size_t>(m)];
        }
        const double err = std::abs(got - want) / std::max(std::abs(want), 1.0);
        max_err = std::max(max_err, err);
        std::cout << m << ',' << rabi::fmt17(want) << ',' << rabi::fmt17(got) << ','
                  << rabi::fmt17(err) << "\n";
    }
    std::cout << "# max_rel_err=" << rabi::fmt17(max_err)
              << ",converged=" << (num.report.converged ? 1 : 0) << "\n";
    return kExitOk;
}

// ---------------------------------- phase -----------------------------------

int cmd_phase(const std::string& curve, bool branches, bool grid,
              const std::string& kappa_range, const std::string& g_range) {
    if (branches) {
        std::cout << "g_over_gc,kappa_minus,kappa_plus,product\n";
        for (double x : parse_range(g_range.empty() ? "1:3:0.01" : g_range)) {
            if (x < 1.0) continue;
            auto [km, kp] = rabi::bifurcation_branches(x);
            std::cout << rabi::fmt17(x) << ',' << rabi::fmt17(km) << ','
                      << rabi::fmt17(kp) << ',' << rabi::fmt17(km * kp) << "\n";
        }
        return kExitOk;
    }
    if (grid) {
        const std::vector<double> ks = parse_range(kappa_range.empty() ? "0.1:4:0.02" : kappa_range);
        const std::vector<double> gs = parse_range(g_range.empty() ? "0.1:3:0.02" : g_range);
        std::cout << "kappa,g_over_gc,region,epsilon_gap_sq\n";
        for (double kappa : ks)
            for (double x : gs) {
                const rabi::PhasePoint pt = rabi::classify_reduced(kappa, x);
                std::cout << rabi::fmt17(pt.kappa) << ',' << rabi::fmt17(pt.g_over_gc)
                          << ',' << rabi::region_code(pt.region) << ','
                          << rabi::fmt17(pt.epsilon_gap_sq) << "\n";
            }
        return kExitOk;
    }
    const std::vector<double> ks = parse_range(kappa_range.empty() ? "0.1:4:0.01" : kappa_range);
    if (curve == "asymptotes") {
        std::cout << "kappa,steep,flat\n";
        for (double kappa : ks) {
            auto [steep, flat] = rabi::asymptote_lines(kappa);
            std::cout << rabi::fmt17(kappa) << ',' << rabi::fmt17(steep) << ','
                      << rabi::fmt17(flat) << "\n";
        }
    } else if (curve == "boundary") {
        std::cout << "kappa,g_over_gc\n";
        for (double kappa : ks)
            std::cout << rabi::fmt17(kappa) << ','
                      << rabi::fmt17(rabi::boundary_curve(kappa)) << "\n";
    } else {
        std::cerr << "error: --curve must be boundary or asymptotes\n";
        return kExitUsage;
    }
    return kExitOk;
}

// --------------------------------- validate ---------------------------------

int cmd_validate(const rabi::ValidateOptions& opts) {
    const std::vector<rabi::CheckResult> results = rabi::run_validation(opts);
    int failed = 0;
    json out;
    out["schema"] = 1;
    out["config"] = {{"only", opts.only},
                     {"inject_error", opts.inject_error},
                     {"oracle_tol", opts.oracle_tol},
                     {"seed", opts.seed}};
    out["results"] = json::array();
    for (const rabi::CheckResult& r : results) {
        if (!r.passed) ++failed;
        out["results"].push_back({{"name", r.name},
                                  {"passed", r.passed},
                                  {"metric", r.metric},
                                  {"detail", r.detail}});
    }
    out["diagnostics"] = {{"total", results.size()},
                          {"failed", failed}};
    std::cout << out.dump(2) << "\n";
    return failed == 0 ? kExitOk : kExitValidationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form Rabi/Jaynes-Cummings spectra with a truncated "
                 "Fock-space oracle"};
    app.set_config("--config", "", "key=value config file; flags win");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string dump_matrix, g_over_gc_list;
    std::string curve, kappa_range, g_range;
    bool branches = false, grid = false;
    rabi::ValidateOptions vopts;
    vopts.oracle_tol = default_tolerance();

    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form level table");
    add_model_flags(spectrum, cfg);

    CLI::App* oracle = app.add_subcommand("oracle", "converged truncated-Fock spectrum");
    add_model_flags(oracle, cfg);
    oracle->add_option("--dump-matrix", dump_matrix, "write the N0 matrix as CSV");

    CLI::App* compare = app.add_subcommand("compare", "closed form vs oracle");
    add_model_flags(compare, cfg);
    compare->add_option("--g-over-gc", g_over_gc_list, "comma list of g/g_c (ar model)");

    CLI::App* phase = app.add_subcommand("phase", "boundary/branch/asymptote/grid CSV");
    phase->add_option("--curve", curve, "boundary|asymptotes");
    phase->add_flag("--branches", branches, "bifurcation branches vs g/g_c");
    phase->add_flag("--grid", grid, "region map grid");
    phase->add_option("--kappa", kappa_range, "kappa range start:stop:step");
    phase->add_option("--g-over-gc", g_range, "g/g_c range start:stop:step");

    CLI::App* validate = app.add_subcommand("validate", "run the invariant suites");
    validate->add_option("--only", vopts.only, "single suite to run")
        ->check(CLI::IsMember(rabi::validation_suites()));
    validate->add_flag("--inject-error", vopts.inject_error,
                       "flip the sign of C; the suite must then fail");
    validate->add_option("--seed", vopts.seed, "RNG seed");
    validate->add_option("--tol", vopts.oracle_tol, "oracle convergence tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg, dump_matrix);
        if (compare->parsed()) return cmd_compare(cfg, g_over_gc_list);
        if (phase->parsed()) return cmd_phase(curve, branches, grid, kappa_range, g_range);
        if (validate->parsed()) return cmd_validate(vopts);
    } catch (const rabi::SuperradiantRegime& e) {
        std::cerr << "error: superradiant regime: " << e.what() << "\n";
        return kExitPhaseDomain;
    } catch (const rabi::NoRealTransition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPhaseDomain;
    } catch (const rabi::BoundaryDegenerate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPhaseDomain;
    } catch (const rabi::ConvergenceFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const rabi::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
