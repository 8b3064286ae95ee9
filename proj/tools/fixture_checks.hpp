#pragma once

// Comparisons of freshly computed codes and decoding traces against the
// shipped fixtures. Each returns a list of mismatch descriptions.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace skewcodes::cli {

using nlohmann::json;

struct Comparison {
    int checks = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

Comparison compare_bch_trace(const json& config, const json& trace);
Comparison compare_ht_example(const json& config, const json& expected);

struct RowCheck {
    int id = 0;
    std::string label;
    std::string alpha_used;
    bool alpha_substituted = false;
    int dim = 0;
    int ht_bound = 0;
    std::optional<int> distance;
    std::vector<std::string> mismatches;
};

/// Rebuilds one table row with Conway moduli; brute-forces the distance when
/// |L|^dim <= cap.
RowCheck check_table_row(const json& row, std::uint64_t cap, int jobs);
json row_record(const RowCheck& r);

/// Fixture documents compiled into the binary.
const char* builtin_fixture(const std::string& name);

}  // namespace skewcodes::cli
