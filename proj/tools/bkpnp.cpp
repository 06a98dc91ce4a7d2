#include <iostream>

#include <CLI11.hpp>

#include "bkp/cli.hpp"

int main(int argc, char** argv) {
    bkp::RunConfig config;
    CLI::App app{"Connected n-point functions of BKP tau-functions from affine coordinates"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--coords", config.coords_path, "Coordinate file: JSON list of [n, m, \"p/q\"]");
        sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", config.out_path, "Output file (default: stdout)");
    };
    auto add_eval = [&](CLI::App* sub) {
        sub->add_option("--n", config.n, "Number of points (verify: largest n)");
        sub->add_option("--max-weight,--weight", config.max_weight, "Bound on the sum of indices");
        sub->add_option("--window-cap", config.window_cap, "Positive exponent cap (0: automatic)");
    };

    CLI::App* npoint = app.add_subcommand("npoint", "Tabulate derivatives of log tau");
    add_common(npoint);
    add_eval(npoint);
    npoint->add_option("--formula", config.formula, "Route")
        ->check(CLI::IsMember({"wangyang", "embedded", "oracle", "all"}));

    CLI::App* verify = app.add_subcommand("verify", "Run identity checks");
    add_common(verify);
    add_eval(verify);
    verify->add_option("--check", config.check, "Single check")->check(CLI::IsMember(bkp::verify_check_names()));
    verify->add_option("--suite", config.suite, "Check suite")->check(CLI::IsMember({"full"}));
    verify->add_option("--seed", config.seed, "Seed for random instances");
    verify->add_option("--instances", config.instances, "Number of seeded instances");
    verify->add_option("--k", config.k, "Lemma size");

    CLI::App* convert = app.add_subcommand("convert", "BKP coordinates to KP coordinates");
    add_common(convert);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : bkp::kExitInputError;
    }
    config.command = app.get_subcommands().front()->get_name();
    return bkp::run_command(config, std::cout, std::cerr);
}
