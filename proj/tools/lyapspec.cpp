#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lyap/cli.hpp"

namespace {

void add_run_flags(CLI::App& cmd, lyap::cli::RunConfig& cfg, std::string& method,
                   std::vector<double>& x0, std::uint64_t& seed)
{
    cmd.set_help_flag("--help", "print this help and exit");
    cmd.add_option("--system", cfg.system, "linear4 | lorenz | walls | rotation")->required();
    cmd.add_option("--h", cfg.h, "substep; the big step is 4h")->capture_default_str();
    cmd.add_option("--t-end", cfg.t_end, "final time")->capture_default_str();
    cmd.add_option("--x0", x0, "initial point, comma separated")->delimiter(',');
    cmd.add_option("--record-every", cfg.record_every, "big steps between recorded rows")
        ->capture_default_str();
    cmd.add_option("--out", cfg.out_dir, "output directory (default $LYAP_OUT or .)");
    cmd.add_option("--seed", seed, "reserved; every built-in system is deterministic");
    cmd.add_option("--shift", cfg.shift, "per-exponent offsets for the plot script only")
        ->delimiter(',');
    cmd.add_option("--method", method, "continuous | standard | both")
        ->check(CLI::IsMember({"continuous", "standard", "both"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lyapunov spectra by the continuous Λ equation and by Gram-Schmidt"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help and exit");

    lyap::cli::RunConfig cfg;
    cfg.out_dir = lyap::cli::default_out_dir();
    std::string method = "both";
    std::vector<double> x0;
    std::uint64_t seed = 0;

    auto* run = app.add_subcommand("run", "integrate and write CSV, summary and plot script");
    add_run_flags(*run, cfg, method, x0, seed);
    auto* compare = app.add_subcommand("compare", "run both methods and report the differences");
    add_run_flags(*compare, cfg, method, x0, seed);
    app.add_subcommand("list", "list the built-in systems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : lyap::cli::kExitUsage;
    }

    if (app.got_subcommand("list"))
        return lyap::cli::cmd_list(std::cout);

    cfg.method = lyap::cli::parse_method(method);
    if (!x0.empty())
        cfg.x0 = x0;
    if (run->count("--seed") + compare->count("--seed") > 0)
        cfg.seed = seed;

    try {
        if (app.got_subcommand("run"))
            return lyap::cli::cmd_run(cfg, std::cout, std::cerr);
        return lyap::cli::cmd_compare(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
