#pragma once

// JSON records for codes and decoding traces, plus a plain-text rendering.

#include <string>
#include <vector>

#include <json.hpp>

#include "skewcodes/rs_decode.hpp"

namespace skewcodes::cli {

using nlohmann::json;

json element(const FieldElement& x);
json elements(const std::vector<FieldElement>& xs);
/// {"text", "coeffs"} with ascending coefficients.
json polynomial(const SkewPolynomial& f, const char* var = "x");
json matrix(const Matrix& m);
json params(const HTParams& p);

json code_report(const SkewCyclicCode& code);
json decode_report(const DecodeReport& rep);

/// Adds command, version and config hash around a result body.
json envelope(const std::string& command, const std::string& hash, json result);

/// Indented "key: value" rendering; scalar arrays stay on one line.
std::string render_text(const json& record);

}  // namespace skewcodes::cli
