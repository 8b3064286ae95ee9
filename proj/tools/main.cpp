#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace skewcodes::cli;
    CLI::App app{"Skew cyclic and skew BCH codes over finite-field towers"};
    app.set_version_flag("--version", SKEWCODES_VERSION);
    app.require_subcommand(1, 1);
    app.fallthrough();

    Options opt;
    std::string config, fixtures, format = "text";
    std::uint64_t seed = 0, cap = 0;
    int jobs = 0;
    app.add_option("--config", config, "Job configuration (JSON)");
    app.add_option("--fixtures", fixtures, "Directory overriding the built-in fixtures (selftest, table)");
    auto* seed_opt = app.add_option("--seed", seed, "Seed for element search and self-test sampling");
    auto* cap_opt = app.add_option("--cap", cap, "Brute-force enumeration cap (messages)");
    auto* jobs_opt = app.add_option("--jobs", jobs, "Worker threads; 0 uses the OpenMP default");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "record"}));

    const char* subcommands[][2] = {
        {"build", "Construct the code and print its parameters"},
        {"bound", "Hartmann-Tzeng bound of the closed defining set"},
        {"encode", "Encode the messages in the task section"},
        {"decode", "Decode the words in the task section"},
        {"mindist", "Exact minimum distance by enumeration"},
        {"table", "Recompute the table fixture and compare"},
        {"selftest", "Run the invariant suite at reduced sample counts"},
    };
    for (const auto& sc : subcommands) app.add_subcommand(sc[0], sc[1]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_validation;
    }

    if (!config.empty()) opt.config = config;
    if (!fixtures.empty()) opt.fixtures = fixtures;
    if (*seed_opt) opt.overrides.seed = seed;
    if (*cap_opt) opt.overrides.cap = cap;
    if (*jobs_opt) opt.overrides.jobs = jobs;
    opt.record = format == "record";
    return run_command(app.get_subcommands().front()->get_name(), opt, std::cout, std::cerr);
}
