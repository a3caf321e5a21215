// Command-line front end: constructs Denniston maximal arcs, their cyclic
// collineation groups, the associated two-weight codes and support designs,
// and verifies every closed-form count against exhaustive computation.

#include <iostream>

#include "CLI11.hpp"
#include "maxarc/cli.hpp"

namespace {

void add_common(CLI::App* cmd, maxarc::RunConfig& cfg, std::int64_t& modulus) {
    cmd->add_option("--m", cfg.m, "tower exponent m (d = 2^m)")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--k", cfg.k, "tower exponent k (q = 2^(km))")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--modulus", modulus, "irreducible modulus of GF(q^2) as a bitmask (overrides the canonical one)");
    cmd->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--format", cfg.format, "certificate file format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--jobs", cfg.jobs, "worker threads for exhaustive enumerations")->check(CLI::PositiveNumber);
    cmd->add_flag_function("-v,--verbose", [&cfg](std::int64_t n) { cfg.verbosity = static_cast<int>(n); },
                           "print witnesses in the certificate table");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Denniston maximal arcs, cyclic two-weight codes, and their designs over GF(2^e)"};
    app.require_subcommand(1);

    maxarc::RunConfig cfg;
    std::int64_t modulus = -1;

    auto* construct = app.add_subcommand("construct", "build the arc, partition and code files");
    add_common(construct, cfg, modulus);

    auto* verify = app.add_subcommand("verify", "check the closed-form counts against exhaustive computation");
    add_common(verify, cfg, modulus);
    std::vector<std::string> targets;
    verify->add_option("targets", targets, "any of: arc partition group code designs all (default all)");

    auto* sweep = app.add_subcommand("sweep", "run construct + verify for every (m,k) with 2km <= max-bits");
    unsigned max_bits = 8;
    std::int64_t sweep_modulus = -1;
    sweep->add_option("--max-bits", max_bits, "bound on 2km")->capture_default_str()->check(CLI::PositiveNumber);
    sweep->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
    sweep->add_option("--jobs", cfg.jobs, "worker threads for exhaustive enumerations")->check(CLI::PositiveNumber);
    (void)sweep_modulus;

    CLI11_PARSE(app, argc, argv);

    try {
        if (modulus >= 0) cfg.modulus = static_cast<maxarc::fe>(modulus);
        if (construct->parsed()) {
            maxarc::run_construct(cfg);
            std::cout << "wrote " << maxarc::run_dir(cfg).string() << "\n";
            return 0;
        }
        if (verify->parsed()) {
            const auto outcome = maxarc::run_verify(cfg, targets);
            return outcome.all_pass ? 0 : 1;
        }
        if (sweep->parsed()) {
            return maxarc::run_sweep(max_bits, cfg) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
