// psibeta: exact L2 approximation constants for (psi, beta)-differentiable
// function classes, their oracles, and kernel dumps.

#include "psibeta/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using psibeta::cli::Command;
using psibeta::cli::RunConfig;

void add_sequences(CLI::App* sub, RunConfig& cfg, bool psi_required = true) {
    auto* psi = sub->add_option("--psi", cfg.psi_spec, "geometric:q=<q> | power:r=<r> | file:<path>");
    if (psi_required)
        psi->required();
    sub->add_option("--beta", cfg.beta_spec, "const:<b> | linear:c=<c> | file:<path>")->capture_default_str();
}

void add_out(CLI::App* sub, RunConfig& cfg) { sub->add_option("--out", cfg.out, "write the report to this path"); }

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Approximation constants for classes of (psi,beta)-differentiable periodic functions"};
    app.require_subcommand(1);

    auto* bound = app.add_subcommand("bound", "print one approximation constant");
    bound->add_option("kind", cfg.method_kind, "fourier | vdp | method")->required()->check(
        CLI::IsMember({"fourier", "vdp", "method"}));
    add_sequences(bound, cfg);
    bound->add_option("--n", cfg.n, "method order");
    bound->add_option("--m", cfg.m, "Vallee Poussin band width");
    bound->add_option("--method", cfg.method_spec, "inline JSON or path: {\"n\":..,\"lambda\":[..],\"mu\":[..]}");
    bound->add_option("--tol", cfg.tol, "absolute tolerance")->capture_default_str();
    add_out(bound, cfg);

    auto* table = app.add_subcommand("table", "sweep Fourier and Vallee Poussin constants into CSV");
    add_sequences(table, cfg, false);
    table->add_option("--n-from", cfg.n_from)->capture_default_str();
    table->add_option("--n-to", cfg.n_to)->capture_default_str();
    table->add_option("--m", cfg.m_list, "Vallee Poussin band widths (rows with m > n are skipped)")->delimiter(',');
    table->add_flag("--all-m", cfg.all_m, "emit every 0 <= m <= n");
    table->add_option("--q", cfg.q_list, "sweep geometric psi over these ratios instead of --psi")->delimiter(',');
    table->add_option("--tol", cfg.tol)->capture_default_str();
    add_out(table, cfg);

    auto* verify = app.add_subcommand("verify", "check a constant against quadrature and Fejer lower bounds");
    add_sequences(verify, cfg);
    verify->add_option("--method", cfg.method_spec, "fourier | vdp | inline JSON | path")->default_str("fourier");
    verify->add_option("--n", cfg.n);
    verify->add_option("--m", cfg.m);
    verify->add_option("--fejer", cfg.fejer_orders, "Fejer orders")->delimiter(',')->capture_default_str();
    double verify_tol = 1e-10;
    verify->add_option("--tol", verify_tol, "advertised tolerance")->capture_default_str();
    add_out(verify, cfg);

    auto* best = app.add_subcommand("best", "best approximation of the kernel and best linear approximation of the class");
    add_sequences(best, cfg);
    std::string p_text = "2";
    best->add_option("--p", p_text, "1 | 2 | inf")->check(CLI::IsMember({"1", "2", "inf"}))->capture_default_str();
    best->add_option("--n", cfg.n)->required();
    best->add_option("--grid", cfg.grid, "grid size for p != 2 (power of two)")->capture_default_str();
    best->add_option("--tol", cfg.tol, "convergence tolerance")->capture_default_str();
    best->add_option("--max-iter", cfg.max_iter, "iteration limit for p != 2")->capture_default_str();
    best->add_flag("--show-method", cfg.show_method, "print the optimal method as JSON");
    add_out(best, cfg);

    auto* kernel = app.add_subcommand("kernel", "sample the generating kernel as CSV");
    add_sequences(kernel, cfg);
    kernel->add_option("--samples", cfg.samples)->capture_default_str();
    kernel->add_option("--tol", cfg.tol)->capture_default_str();
    add_out(kernel, cfg);

    auto* compare = app.add_subcommand("compare", "Fourier, Vallee Poussin and a user method side by side");
    add_sequences(compare, cfg);
    compare->add_option("--n", cfg.n)->required();
    compare->add_option("--m", cfg.m)->required();
    compare->add_option("--method", cfg.method_spec, "inline JSON or path");
    compare->add_option("--tol", cfg.tol)->capture_default_str();
    add_out(compare, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (bound->parsed())
        cfg.command = Command::Bound;
    else if (table->parsed())
        cfg.command = Command::Table;
    else if (verify->parsed()) {
        cfg.command = Command::Verify;
        cfg.tol = verify_tol;
    } else if (best->parsed()) {
        cfg.command = Command::Best;
        cfg.p = p_text == "1" ? psibeta::NormExponent::One
                : p_text == "2" ? psibeta::NormExponent::Two
                                : psibeta::NormExponent::Infinity;
    } else if (kernel->parsed())
        cfg.command = Command::Kernel;
    else
        cfg.command = Command::Compare;

    if (cfg.command == Command::Table && cfg.q_list.empty() && cfg.psi_spec.empty()) {
        std::cerr << "psi: required unless --q is given\n";
        return 2;
    }

    const auto result = psibeta::cli::run(cfg);
    if (!result.report.empty()) {
        if (cfg.out.empty()) {
            std::cout << result.report;
        } else {
            std::ofstream out(cfg.out, std::ios::binary);
            if (!out) {
                std::cerr << "out: cannot open '" << cfg.out << "'\n";
                return 2;
            }
            out << result.report;
        }
    }
    if (!result.error.empty())
        std::cerr << result.error << '\n';
    return result.exit_code;
}
