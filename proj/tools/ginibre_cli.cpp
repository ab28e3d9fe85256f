// Command-line front end for the real-Ginibre real-eigenvalue toolkit.
//
// Subcommands:
//   exact          exact table of p_{n,k} in Q[sqrt2]
//   gf             generating-function coefficients with the G_n(1)=1 check
//   en             expected number of real eigenvalues, two routes
//   mc             Monte Carlo estimate vs the exact table
//   verify-kernel  Pfaffian theorem (ell=1) and projection-failure report
//   dump-rho       the exact rho matrix as JSON
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 numerical failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ginibre/kernel.hpp"
#include "ginibre/montecarlo.hpp"
#include "ginibre/probabilities.hpp"
#include "ginibre/qsqrt2.hpp"
#include "ginibre/rho.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
    long n = 12;
    std::string format = "table";
    int digits = 6;
    long max_n = 24;
};

int check_n(const CommonOpts& o) {
    if (o.n < 1) {
        std::cerr << "error: n must be >= 1\n";
        return kExitUsage;
    }
    if (o.n > o.max_n) {
        std::cerr << "warning: n=" << o.n << " exceeds the default bound "
                  << o.max_n << "; exact arithmetic may be slow\n";
    }
    return 0;
}

int cmd_exact(const CommonOpts& o) {
    if (int rc = check_n(o)) return rc;
    ginibre::ProbabilityTable t = ginibre::probability_table(o.n, o.digits);
    if (o.format == "json") {
        std::cout << ginibre::table_to_json(t) << "\n";
    } else if (o.format == "csv") {
        std::cout << ginibre::table_to_csv(t);
    } else {
        std::printf("%4s  %-60s  %s\n", "k", "exact", "decimal");
        for (const auto& r : t.rows)
            std::printf("%4ld  %-60s  %s\n", r.k, r.exact.str().c_str(),
                        r.decimal.c_str());
    }
    return 0;
}

int cmd_gf(const CommonOpts& o) {
    if (int rc = check_n(o)) return rc;
    ginibre::GeneratingFunction gf = ginibre::generating_function(o.n);
    ginibre::QSqrt2 sum;
    for (const auto& c : gf.coefficients) sum += c;
    const bool normalized = sum == ginibre::QSqrt2(1);

    if (o.format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (size_t l = 0; l < gf.coefficients.size(); ++l)
            coeffs.push_back({{"ell", l},
                              {"k", gf.n - 2 * static_cast<long>(l)},
                              {"coefficient", gf.coefficients[l].str()}});
        nlohmann::json j{{"n", gf.n},
                         {"coefficients", coeffs},
                         {"normalized", normalized}};
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << "n,ell,k,coefficient\n";
        for (size_t l = 0; l < gf.coefficients.size(); ++l)
            std::cout << gf.n << "," << l << ","
                      << gf.n - 2 * static_cast<long>(l) << ","
                      << gf.coefficients[l].str() << "\n";
    } else {
        std::printf("G_%ld(z) coefficients (c_l = p_{n,n-2l}):\n", o.n);
        for (size_t l = 0; l < gf.coefficients.size(); ++l)
            std::printf("  z^%-2zu  %s\n", l, gf.coefficients[l].str().c_str());
        std::printf("sum = %s\n", normalized ? "1 (exact)" : "NOT 1");
    }
    if (!normalized) {
        std::cerr << "error: G_n(1) != 1\n";
        return kExitVerification;
    }
    return 0;
}

int cmd_en(const CommonOpts& o) {
    if (int rc = check_n(o)) return rc;
    ginibre::ExpectedRealCount e = ginibre::expected_real_count(o.n);
    if (o.format == "json") {
        nlohmann::json j{{"n", o.n},
                         {"exact", e.exact.str()},
                         {"exact_decimal", e.exact.decimal(o.digits)},
                         {"hypergeometric", e.hypergeometric}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("E_%ld exact   = %s = %s\n", o.n, e.exact.str().c_str(),
                    e.exact.decimal(o.digits).c_str());
        std::printf("E_%ld formula = %.*f\n", o.n, o.digits, e.hypergeometric);
    }
    const double rel = std::abs(e.exact.to_double() - e.hypergeometric) /
                       e.hypergeometric;
    if (rel > 1e-9) {
        std::cerr << "error: exact and hypergeometric E_n disagree (rel "
                  << rel << ")\n";
        return kExitVerification;
    }
    return 0;
}

int cmd_mc(const CommonOpts& o, const ginibre::TrialConfig& cfg) {
    if (int rc = check_n(o)) return rc;
    ginibre::EmpiricalCounts counts = ginibre::estimate(cfg);
    if (counts.solver_failures * 1000000 > counts.total) {
        std::cerr << "error: solver failure rate above 1e-6\n";
        return kExitNumerical;
    }
    ginibre::MonteCarloReport r = ginibre::make_report(cfg, counts);
    if (o.format == "json") {
        std::cout << ginibre::report_to_json(r) << "\n";
    } else if (o.format == "csv") {
        std::cout << ginibre::report_to_csv(r);
    } else {
        std::printf("n=%ld trials=%llu seed=%llu workers=%d\n", cfg.n,
                    static_cast<unsigned long long>(cfg.trials),
                    static_cast<unsigned long long>(cfg.seed), cfg.workers);
        std::printf("%4s  %10s  %10s  %8s\n", "k", "frequency", "exact", "z");
        for (size_t i = 0; i < r.ks.size(); ++i)
            std::printf("%4ld  %10.6f  %10.6f  %8.2f\n", r.ks[i],
                        r.frequencies[i], r.exact[i], r.z_scores[i]);
        std::printf("chi2 = %.3f (dof %ld, p = %.4g)\n", r.chi2, r.chi2_dof,
                    r.chi2_pvalue);
    }
    return 0;
}

int cmd_verify_kernel(long n) {
    if (n < 2 || n > 8) {
        std::cerr << "error: verify-kernel supports 2 <= n <= 8\n";
        return kExitUsage;
    }
    ginibre::TheoremCheck tc = ginibre::theorem_check_ell1(n);
    nlohmann::json j{{"n", n},
                     {"lhs", tc.lhs},
                     {"rhs", tc.rhs},
                     {"rel_err", tc.rel_err},
                     {"quadrature_error_estimate", tc.quad_error}};
    if (n <= 6) {
        ginibre::ProjectionCheck pc = ginibre::projection_failure_demo(
            n, {1.0, 1.0}, {-1.0, 2.0});
        j["projection"] = {{"lhs_re", pc.lhs.real()},
                           {"lhs_im", pc.lhs.imag()},
                           {"rhs_re", pc.rhs.real()},
                           {"rhs_im", pc.rhs.imag()},
                           {"gap", pc.gap},
                           {"quadrature_error_estimate", pc.quad_error}};
    }
    std::cout << j.dump(2) << "\n";
    if (!tc.converged) {
        std::cerr << "error: quadrature did not converge (estimate "
                  << tc.quad_error << ")\n";
        return kExitNumerical;
    }
    if (tc.rel_err > 1e-6) {
        std::cerr << "error: theorem check failed (rel_err " << tc.rel_err
                  << ")\n";
        return kExitVerification;
    }
    return 0;
}

int cmd_dump_rho(const CommonOpts& o) {
    if (int rc = check_n(o)) return rc;
    std::cout << ginibre::rho_to_json(ginibre::rho_matrix(o.n)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact statistics of real eigenvalues in the real Ginibre ensemble"};
    app.require_subcommand(1);

    CommonOpts opts;
    ginibre::TrialConfig mc_cfg;
    mc_cfg.n = 12;
    mc_cfg.trials = 1000000;
    mc_cfg.workers = 8;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--n", opts.n, "ensemble dimension");
        sub->add_option("--max-n", opts.max_n, "warn threshold for exact commands");
        sub->add_option("--digits", opts.digits, "decimal digits")
            ->check(CLI::PositiveNumber);
        if (with_format)
            sub->add_option("--format", opts.format, "output format")
                ->check(CLI::IsMember({"table", "json", "csv"}));
    };

    CLI::App* exact = app.add_subcommand("exact", "exact p_{n,k} table");
    add_common(exact);
    CLI::App* gf = app.add_subcommand("gf", "generating function coefficients");
    add_common(gf);
    CLI::App* en = app.add_subcommand("en", "expected number of real eigenvalues");
    add_common(en);
    CLI::App* dump = app.add_subcommand("dump-rho", "exact rho matrix as JSON");
    add_common(dump);

    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo vs exact table");
    add_common(mc);
    mc->add_option("--trials", mc_cfg.trials, "number of sampled matrices");
    mc->add_option("--seed", mc_cfg.seed, "reproducibility seed");
    mc->add_option("--workers", mc_cfg.workers, "parallel workers")
        ->check(CLI::PositiveNumber);

    CLI::App* vk = app.add_subcommand("verify-kernel",
                                      "Pfaffian theorem / projection report");
    vk->add_option("--n", opts.n, "kernel order (2..8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (exact->parsed()) return cmd_exact(opts);
        if (gf->parsed()) return cmd_gf(opts);
        if (en->parsed()) return cmd_en(opts);
        if (dump->parsed()) return cmd_dump_rho(opts);
        if (vk->parsed()) return cmd_verify_kernel(opts.n);
        if (mc->parsed()) {
            mc_cfg.n = opts.n;
            return cmd_mc(opts, mc_cfg);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
