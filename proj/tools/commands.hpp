#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "config.hpp"

namespace skewcodes::cli {

struct Options {
    std::optional<std::string> config;
    std::optional<std::string> fixtures;  // directory overriding the built-in fixtures
    Overrides overrides;
    bool record = false;
};

/// Runs one subcommand, writing the report to out; returns the exit code.
int run_command(const std::string& command, const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace skewcodes::cli
