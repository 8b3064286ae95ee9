#include "report.hpp"

#include <sstream>

namespace skewcodes::cli {

json element(const FieldElement& x) { return x.field().format(x); }

json elements(const std::vector<FieldElement>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(element(x));
    return out;
}

json polynomial(const SkewPolynomial& f, const char* var) {
    return {{"text", f.to_string(Notation::power, var)}, {"coeffs", elements(f.coeffs())}};
}

json matrix(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(elements(m.row(i)));
    return out;
}

json params(const HTParams& p) {
    return {{"b", p.b}, {"delta", p.delta}, {"r", p.r}, {"t1", p.t1}, {"t2", p.t2}};
}

json code_report(const SkewCyclicCode& code) {
    const Tower& tw = *code.tower;
    const BoundResult bound = ht_bound(code.T_closed);
    json out = {
        {"n", code.n},
        {"mu", tw.mu()},
        {"s", tw.s()},
        {"dim", code.dim},
        {"designed_distance", code.designed_distance},
        {"singleton_bound", code.n - code.dim + 1},
        {"params", params(code.params)},
        {"T", code.T.indices},
        {"T_closed", code.T_closed.indices},
        {"alpha", element(code.alpha)},
        {"beta", element(code.beta)},
        {"epsilon", element(tw.epsilon_image())},
        {"sigma_exponent", tw.sigma().exponent()},
        {"theta_exponent", tw.theta().exponent()},
        {"g_T", polynomial(code.g_T)},
        {"g_bar", polynomial(code.g_bar_L)},
        {"ht_bound", bound.bound},
        {"witness", params(bound.witness)},
    };
    if (code.bch_t) out["bch_t"] = *code.bch_t;
    return out;
}

json decode_report(const DecodeReport& rep) {
    json out = {
        {"status", to_string(rep.status)},
        {"received", elements(rep.received)},
        {"permuted", elements(rep.permuted)},
        {"syndromes", elements(rep.syndromes)},
        {"syndrome_matrix", matrix(rep.syndrome_matrix)},
        {"nu", rep.nu},
        {"echelon", matrix(rep.echelon)},
        {"locator", polynomial(rep.locator, "y")},
    };
    if (!rep.stage.empty()) out["failed_stage"] = rep.stage;
    if (rep.status == DecodeStatus::too_many_errors && rep.stage == "locator") return out;
    out["positions_y"] = rep.positions_y;
    if (rep.stage == "positions") return out;
    out["system"] = matrix(rep.system);
    out["rhs"] = elements(rep.rhs);
    if (rep.stage == "values" && rep.values.empty()) return out;
    out["values"] = elements(rep.values);
    out["positions_x"] = rep.positions_x;
    if (rep.status == DecodeStatus::not_in_L) return out;
    out["error"] = elements(rep.error);
    out["codeword"] = elements(rep.codeword);
    if (rep.status == DecodeStatus::ok) out["message"] = polynomial(rep.message);
    return out;
}

json envelope(const std::string& command, const std::string& hash, json result) {
    return {{"command", command}, {"version", SKEWCODES_VERSION}, {"config_hash", hash}, {"result", std::move(result)}};
}

namespace {

bool is_flat(const json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
        if (e.is_structured()) return false;
    return true;
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string flat(const json& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + "]";
}

void render(std::ostringstream& os, const json& v, int indent) {
    const std::string pad(indent * 2, ' ');
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (x.is_object() && x.size() == 2 && x.contains("text") && x.contains("coeffs")) {
                os << pad << k << ": " << scalar(x["text"]) << "\n";
            } else if (x.is_structured() && !is_flat(x)) {
                os << pad << k << ":\n";
                render(os, x, indent + 1);
            } else {
                os << pad << k << ": " << (is_flat(x) ? flat(x) : scalar(x)) << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& x : v) {
            if (is_flat(x)) {
                os << pad << flat(x) << "\n";
            } else if (x.is_structured()) {
                os << pad << "-\n";
                render(os, x, indent + 1);
            } else {
                os << pad << scalar(x) << "\n";
            }
        }
    } else {
        os << pad << scalar(v) << "\n";
    }
}

}  // namespace

std::string render_text(const json& record) {
    std::ostringstream os;
    render(os, record, 0);
    return os.str();
}

}  // namespace skewcodes::cli
