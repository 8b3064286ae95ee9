#pragma once

// Job configuration: parsing, validation and construction of the tower and code.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewcodes/codes.hpp"

namespace skewcodes::cli {

using nlohmann::json;

enum ExitCode : int { exit_ok = 0, exit_validation = 2, exit_decode = 3, exit_mismatch = 4 };

struct FieldConfig {
    unsigned p = 2;
    std::uint64_t q = 2;
    unsigned mu = 1;
    unsigned s = 1;
    unsigned h = 1;
    std::optional<unsigned> k;
    std::vector<unsigned> L_modulus;  // ascending
    std::vector<unsigned> M_modulus;
    std::string L_name = "b";
    std::string M_name = "a";
    std::optional<std::string> epsilon;
    std::optional<std::string> alpha;
};

struct CodeConfig {
    std::string mode = "bch";  // "bch" or "ht"
    HTParams ht;
    int t = 1;  // bch only
};

struct TaskConfig {
    std::vector<json> messages;  // polynomial text or element arrays
    std::vector<json> words;
    std::uint64_t cap = std::uint64_t{1} << 24;
    int jobs = 0;
    std::uint64_t seed = 0;
};

struct JobConfig {
    FieldConfig field;
    CodeConfig code;
    TaskConfig task;
    json canonical;  // effective configuration, jobs removed
};

struct Overrides {
    std::optional<std::uint64_t> seed, cap;
    std::optional<int> jobs;
};

/// Throws ValidationError on any schema or range problem.
JobConfig parse_config(const json& doc, const Overrides& ov = {});
json read_json_file(const std::string& path);

/// 64-bit FNV-1a of the canonical (sorted, compact) serialization, as hex.
std::string config_hash(const json& canonical);

struct BuiltCode {
    std::shared_ptr<const Tower> tower;
    SkewCyclicCode code;
};

BuiltCode build(const JobConfig& cfg);

/// Parses a polynomial over L (text) or an ascending element array into a
/// word of length n; shorter arrays are zero padded.
Word parse_word(const SkewCyclicCode& code, const json& w);
SkewPolynomial parse_message(const SkewCyclicCode& code, const json& m);

}  // namespace skewcodes::cli
