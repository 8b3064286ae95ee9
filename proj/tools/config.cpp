#include "config.hpp"

#include <cstdio>
#include <fstream>
#include <set>

namespace skewcodes::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ValidationError(where + ": " + what); }

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
    if (!obj.is_object()) fail(where, "expected an object");
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) fail(where, "unknown key '" + k + "'");
}

std::int64_t get_int(const json& obj, const std::string& where, const char* key, std::int64_t lo, std::int64_t hi) {
    if (!obj.contains(key)) fail(where, std::string("missing '") + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < lo || x > hi)
        fail(where + "." + key, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return x;
}

std::int64_t get_int_or(const json& obj, const std::string& where, const char* key, std::int64_t lo, std::int64_t hi,
                        std::int64_t dflt) {
    return obj.contains(key) ? get_int(obj, where, key, lo, hi) : dflt;
}

std::optional<std::string> get_string(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) return std::nullopt;
    if (!obj.at(key).is_string()) fail(where + "." + key, "expected a string");
    return obj.at(key).get<std::string>();
}

std::vector<unsigned> get_modulus(const json& obj, const std::string& where, const char* key, unsigned p,
                                  unsigned degree) {
    if (!obj.contains(key)) fail(where, std::string("missing '") + key + "'");
    const json& v = obj.at(key);
    const std::string at = where + "." + key;
    if (v.is_string()) {
        if (v.get<std::string>() != "conway") fail(at, "expected \"conway\" or an array of coefficients");
        return conway_polynomial(p, degree);
    }
    if (!v.is_array() || v.empty()) fail(at, "expected a non-empty array of ascending coefficients");
    std::vector<unsigned> out;
    for (const auto& c : v) {
        if (!c.is_number_integer()) fail(at, "coefficients must be integers");
        const auto x = c.get<std::int64_t>();
        if (x < 0 || x >= static_cast<std::int64_t>(p)) fail(at, "coefficient outside [0, p)");
        out.push_back(static_cast<unsigned>(x));
    }
    if (out.size() != degree + 1u)
        fail(at, "degree " + std::to_string(out.size() - 1) + " does not match the tower (" + std::to_string(degree) + ")");
    return out;
}

std::vector<json> get_items(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) return {};
    const json& v = obj.at(key);
    if (!v.is_array()) fail(where + "." + key, "expected an array");
    std::vector<json> out;
    for (const auto& x : v) {
        if (!x.is_string() && !x.is_array()) fail(where + "." + key, "entries are polynomial strings or element arrays");
        if (x.is_array())
            for (const auto& e : x)
                if (!e.is_string() && !e.is_number_integer())
                    fail(where + "." + key, "array entries must be element strings or integers");
        out.push_back(x);
    }
    return out;
}

unsigned degree_over_p(std::uint64_t q, unsigned p) {
    unsigned d = 0;
    while (q > 1) {
        if (q % p) return 0;
        q /= p;
        ++d;
    }
    return d;
}

}  // namespace

JobConfig parse_config(const json& doc, const Overrides& ov) {
    only_keys(doc, "config", {"field", "code", "task"});
    if (!doc.contains("field")) fail("config", "missing 'field'");
    if (!doc.contains("code")) fail("config", "missing 'code'");
    JobConfig cfg;

    const json& f = doc.at("field");
    only_keys(f, "field", {"p", "q", "mu", "s", "h", "k", "L_modulus", "M_modulus", "L_name", "M_name", "epsilon", "alpha"});
    FieldConfig& fc = cfg.field;
    fc.p = static_cast<unsigned>(get_int(f, "field", "p", 2, 65521));
    if (!is_prime(fc.p)) fail("field.p", "not a prime");
    fc.q = static_cast<std::uint64_t>(get_int_or(f, "field", "q", 2, std::int64_t{1} << 32, fc.p));
    const unsigned d = degree_over_p(fc.q, fc.p);
    if (d == 0) fail("field.q", "not a power of p");
    fc.mu = static_cast<unsigned>(get_int(f, "field", "mu", 1, 64));
    fc.s = static_cast<unsigned>(get_int(f, "field", "s", 1, 64));
    const unsigned n = fc.mu * fc.s;
    if (n < 2 || n > 64) fail("field", "n = mu*s must lie in [2, 64]");
    if (static_cast<std::uint64_t>(d) * n > 63) fail("field", "M is too large");
    fc.h = static_cast<unsigned>(get_int_or(f, "field", "h", 0, 64, 1));
    if (f.contains("k")) fc.k = static_cast<unsigned>(get_int(f, "field", "k", 0, 64));
    fc.L_modulus = get_modulus(f, "field", "L_modulus", fc.p, d * fc.mu);
    fc.M_modulus = get_modulus(f, "field", "M_modulus", fc.p, d * n);
    fc.L_name = get_string(f, "field", "L_name").value_or("b");
    fc.M_name = get_string(f, "field", "M_name").value_or("a");
    for (const auto* nm : {&fc.L_name, &fc.M_name})
        if (nm->empty() || nm->size() > 8 || *nm == "x" || *nm == "y" ||
            nm->find_first_not_of("abcdefghijklmnopqrstuvwxyz") != std::string::npos)
            fail("field", "generator names are 1-8 lowercase letters other than x and y");
    if (fc.L_name == fc.M_name) fail("field", "L_name and M_name must differ");
    fc.epsilon = get_string(f, "field", "epsilon");
    fc.alpha = get_string(f, "field", "alpha");

    const json& c = doc.at("code");
    const auto mode = get_string(c, "code", "mode");
    if (!mode) fail("code", "missing 'mode'");
    CodeConfig& cc = cfg.code;
    cc.mode = *mode;
    cc.ht.n = static_cast<int>(n);
    if (cc.mode == "bch") {
        only_keys(c, "code", {"mode", "delta", "t"});
        cc.ht.delta = static_cast<int>(get_int(c, "code", "delta", 2, n));
        cc.t = static_cast<int>(get_int(c, "code", "t", 1, n - 1));
        cc.ht.b = 0;
        cc.ht.r = 0;
        cc.ht.t1 = cc.t;
        cc.ht.t2 = 1;
    } else if (cc.mode == "ht") {
        only_keys(c, "code", {"mode", "b", "delta", "r", "t1", "t2"});
        cc.ht.b = static_cast<int>(get_int_or(c, "code", "b", 0, n - 1, 0));
        cc.ht.delta = static_cast<int>(get_int(c, "code", "delta", 2, n));
        cc.ht.r = static_cast<int>(get_int_or(c, "code", "r", 0, n - 1, 0));
        cc.ht.t1 = static_cast<int>(get_int(c, "code", "t1", 1, n - 1));
        cc.ht.t2 = static_cast<int>(get_int_or(c, "code", "t2", 0, n - 1, cc.ht.r > 0 ? -1 : 1));
        if (cc.ht.t2 < 0) fail("code", "missing 't2'");
    } else {
        fail("code.mode", "expected \"bch\" or \"ht\"");
    }
    cc.ht.validate();

    TaskConfig& tc = cfg.task;
    const json empty = json::object();
    const json& t = doc.contains("task") ? doc.at("task") : empty;
    only_keys(t, "task", {"messages", "words", "cap", "jobs", "seed"});
    tc.messages = get_items(t, "task", "messages");
    tc.words = get_items(t, "task", "words");
    tc.cap = static_cast<std::uint64_t>(get_int_or(t, "task", "cap", 1, std::int64_t{1} << 40, std::int64_t{1} << 24));
    tc.jobs = static_cast<int>(get_int_or(t, "task", "jobs", 0, 1024, 0));
    tc.seed = static_cast<std::uint64_t>(get_int_or(t, "task", "seed", 0, INT64_MAX, 0));
    if (ov.cap) {
        if (*ov.cap < 1 || *ov.cap > (std::uint64_t{1} << 40)) fail("--cap", "out of range [1, 2^40]");
        tc.cap = *ov.cap;
    }
    if (ov.jobs) {
        if (*ov.jobs < 0 || *ov.jobs > 1024) fail("--jobs", "out of range [0, 1024]");
        tc.jobs = *ov.jobs;
    }
    if (ov.seed) tc.seed = *ov.seed;

    cfg.canonical = doc;
    cfg.canonical["task"] = t;
    cfg.canonical["task"]["cap"] = tc.cap;
    cfg.canonical["task"]["seed"] = tc.seed;
    cfg.canonical["task"].erase("jobs");
    return cfg;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string config_hash(const json& canonical) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : canonical.dump()) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

BuiltCode build(const JobConfig& cfg) {
    const FieldConfig& fc = cfg.field;
    auto L = Field::make({fc.p, fc.L_modulus, fc.L_name});
    auto M = Field::make({fc.p, fc.M_modulus, fc.M_name});
    const auto ext = extend_automorphism(fc.q, fc.mu, fc.h, fc.s, fc.k);
    std::optional<FieldElement> eps;
    if (fc.epsilon) eps = M->parse(*fc.epsilon);
    auto tower = Tower::make(L, M, ext, eps);
    FieldElement alpha = fc.alpha ? M->parse(*fc.alpha) : normal_element_search(tower->theta(), cfg.task.seed);
    const CodeConfig& cc = cfg.code;
    SkewCyclicCode code = cc.mode == "bch" ? build_bch(tower, alpha, cc.ht.delta, cc.t) : build_code(tower, alpha, cc.ht);
    return {tower, std::move(code)};
}

Word parse_word(const SkewCyclicCode& code, const json& w) {
    const Field& L = code.L();
    Word out;
    if (w.is_string()) {
        const auto f = parse_skew_polynomial(code.tower->sigma(), w.get<std::string>());
        if (f.degree() >= code.n) throw ValidationError("word polynomial has degree >= n");
        out = f.coeffs();
    } else {
        for (const auto& e : w) out.push_back(e.is_string() ? L.parse(e.get<std::string>()) : L.from_int(e.get<std::int64_t>()));
        if (static_cast<int>(out.size()) > code.n) throw ValidationError("word longer than n");
    }
    out.resize(code.n, L.zero());
    return out;
}

SkewPolynomial parse_message(const SkewCyclicCode& code, const json& m) {
    const Field& L = code.L();
    SkewPolynomial f;
    if (m.is_string()) {
        f = parse_skew_polynomial(code.tower->sigma(), m.get<std::string>());
    } else {
        std::vector<FieldElement> c;
        for (const auto& e : m) c.push_back(e.is_string() ? L.parse(e.get<std::string>()) : L.from_int(e.get<std::int64_t>()));
        f = SkewPolynomial(code.tower->sigma(), std::move(c));
    }
    if (f.degree() >= code.dim) throw ValidationError("message degree must be below dim = " + std::to_string(code.dim));
    return f;
}

}  // namespace skewcodes::cli
