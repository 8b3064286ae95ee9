#include "fixture_checks.hpp"

#include <algorithm>

#include "config.hpp"
#include "fixture_data.hpp"
#include "report.hpp"

namespace skewcodes::cli {

namespace {

class Diff {
  public:
    std::vector<std::string> out;
    int checks = 0;

    template <class A, class B>
    void eq(const std::string& what, const A& expected, const B& got) {
        ++checks;
        if (!(expected == got)) out.push_back(what + ": expected " + show(expected) + ", got " + show(got));
    }

  private:
    static std::string show(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }
    static std::string show(const SkewPolynomial& f) { return f.to_string(); }
    static std::string show(const FieldElement& x) { return x.field().format(x); }
    static std::string show(const std::vector<FieldElement>& v) { return elements(v).dump(); }
    static std::string show(const std::vector<int>& v) { return json(v).dump(); }
    static std::string show(int v) { return std::to_string(v); }
};

std::vector<FieldElement> parse_desc(const Field& F, const json& arr) {
    std::vector<FieldElement> out;
    for (const auto& e : arr) out.push_back(F.parse(e.get<std::string>()));
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<FieldElement> parse_row(const Field& F, const json& arr) {
    std::vector<FieldElement> out;
    for (const auto& e : arr) out.push_back(F.parse(e.get<std::string>()));
    return out;
}

}  // namespace

Comparison compare_bch_trace(const json& config, const json& trace) {
    Diff d;
    const JobConfig cfg = parse_config(config);
    const BuiltCode built = build(cfg);
    const SkewCyclicCode& code = built.code;
    const Tower& tw = *built.tower;
    const Field& L = tw.L();
    const Field& M = tw.M();

    d.eq("beta", M.parse(trace.at("beta").get<std::string>()), code.beta);
    d.eq("T", trace.at("T").get<std::vector<int>>(), code.T.indices);
    d.eq("T_closed", trace.at("T_closed").get<std::vector<int>>(), code.T_closed.indices);
    d.eq("g", parse_skew_polynomial(tw.theta(), trace.at("g").get<std::string>()), code.g_T);
    d.eq("g_bar", parse_skew_polynomial(tw.sigma(), trace.at("g_bar").get<std::string>()), code.g_bar_L);

    const RsContext ctx = rs_context(code);
    d.eq("u", trace.at("u").get<int>(), ctx.u);
    d.eq("g_prime", parse_skew_polynomial(ctx.rho, trace.at("g_prime").get<std::string>()), ctx.g_prime);

    const SkewPolynomial msg = parse_message(code, trace.at("message"));
    d.eq("codeword", parse_desc(L, trace.at("codeword_desc")), encode(code, msg));

    const Word received = parse_word(code, cfg.task.words.at(0));
    d.eq("received", parse_desc(L, trace.at("received_desc")), received);

    const DecodeReport rep = decode_bch(code, ctx, received);
    d.eq("status", json("ok"), json(to_string(rep.status)));
    d.eq("permuted", parse_desc(M, trace.at("permuted_desc")), rep.permuted);
    const json& H = trace.at("syndrome_matrix");
    d.eq("syndrome_matrix.rows", static_cast<int>(H.size()), static_cast<int>(rep.syndrome_matrix.rows()));
    for (std::size_t i = 0; i < H.size() && i < rep.syndrome_matrix.rows(); ++i)
        d.eq("syndrome_matrix[" + std::to_string(i) + "]", parse_row(M, H[i]), rep.syndrome_matrix.row(i));
    if (rep.nu >= 0 && static_cast<std::size_t>(rep.nu) < rep.echelon.rows())
        d.eq("echelon_bottom_row", parse_row(M, trace.at("echelon_bottom_row")), rep.echelon.row(rep.nu));
    else
        d.eq("echelon_bottom_row", json("present"), json("missing"));
    d.eq("locator", parse_skew_polynomial(ctx.rho, trace.at("locator").get<std::string>()), rep.locator);
    d.eq("positions_y", trace.at("positions_y").get<std::vector<int>>(), rep.positions_y);
    const json& A = trace.at("system");
    d.eq("system.rows", static_cast<int>(A.size()), static_cast<int>(rep.system.rows()));
    for (std::size_t i = 0; i < A.size() && i < rep.system.rows(); ++i)
        d.eq("system[" + std::to_string(i) + "]", parse_row(M, A[i]), rep.system.row(i));
    d.eq("rhs", parse_row(M, trace.at("rhs")), rep.rhs);
    d.eq("values", parse_row(M, trace.at("values")), rep.values);
    d.eq("positions_x", trace.at("positions_x").get<std::vector<int>>(), rep.positions_x);
    d.eq("error", parse_word(code, trace.at("error")), rep.error);
    d.eq("decoded_message", msg, rep.message);
    return {d.checks, d.out};
}

Comparison compare_ht_example(const json& config, const json& expected) {
    Diff d;
    const BuiltCode built = build(parse_config(config));
    const SkewCyclicCode& code = built.code;
    d.eq("T", expected.at("T").get<std::vector<int>>(), code.T.indices);
    d.eq("T_closed", expected.at("T_closed").get<std::vector<int>>(), code.T_closed.indices);
    d.eq("dim", expected.at("dim").get<int>(), code.dim);
    d.eq("designed_distance", expected.at("designed_distance").get<int>(), code.designed_distance);
    d.eq("g_bar", parse_skew_polynomial(built.tower->sigma(), expected.at("g_bar").get<std::string>()), code.g_bar_L);
    return {d.checks, d.out};
}

RowCheck check_table_row(const json& row, std::uint64_t cap, int jobs) {
    RowCheck rc;
    rc.id = row.at("id").get<int>();
    rc.label = row.value("label", "");
    Diff d;
    const unsigned p = row.at("p"), mu = row.at("mu"), s = row.at("s");
    const std::uint64_t q = row.at("q");
    unsigned deg = 0;
    for (std::uint64_t x = q; x > 1; x /= p) ++deg;
    const int n = static_cast<int>(mu * s);
    d.eq("n", row.at("n").get<int>(), n);

    HTParams hp{row.at("b"), row.at("delta"), row.at("r"), row.at("t1"), row.at("t2"), n};
    hp.validate();
    const DefiningSet T = ht_set(hp, static_cast<int>(mu), static_cast<int>(s));
    const DefiningSet Tc = coset_closure(T);
    d.eq("T", row.at("T").get<std::vector<int>>(), T.indices);
    d.eq("T_closed", row.at("T_closed").get<std::vector<int>>(), Tc.indices);

    auto L = Field::make({p, conway_polynomial(p, deg * mu), "b"});
    auto M = Field::make({p, conway_polynomial(p, deg * mu * s), "a"});
    auto tower = Tower::make(L, M, extend_automorphism(q, mu, row.at("h"), s, row.at("k").get<unsigned>()));
    std::int64_t j = row.at("alpha_exp").get<std::int64_t>();
    if (!is_normal(M->gen_pow(j), tower->theta())) {
        rc.alpha_substituted = true;
        j = 1;
        while (!is_normal(M->gen_pow(j), tower->theta())) ++j;
    }
    const FieldElement alpha = M->gen_pow(j);
    rc.alpha_used = "a^" + std::to_string(j);
    const SkewCyclicCode code = build_code(tower, alpha, hp);
    rc.dim = code.dim;
    d.eq("dim", row.at("dim").get<int>(), code.dim);
    d.eq("singleton", row.at("singleton").get<int>(), n - code.dim + 1);
    rc.ht_bound = ht_bound(code.T_closed).bound;
    const int designed = hp.delta + hp.r;
    if (rc.ht_bound < designed) d.eq("ht_bound >= delta + r", json(designed), json(rc.ht_bound));

    long double words = 1;
    for (int i = 0; i < code.dim; ++i) words *= static_cast<long double>(L->order());
    if (words <= static_cast<long double>(cap)) {
        rc.distance = min_distance_bruteforce(code, cap, jobs);
        if (*rc.distance < designed || *rc.distance > row.at("singleton").get<int>())
            d.eq("distance in [delta + r, singleton]",
                 json(std::to_string(designed) + ".." + std::to_string(row.at("singleton").get<int>())), json(*rc.distance));
    }
    rc.mismatches = std::move(d.out);
    return rc;
}

json row_record(const RowCheck& r) {
    json out = {{"id", r.id},
                {"label", r.label},
                {"alpha", r.alpha_used},
                {"alpha_substituted", r.alpha_substituted},
                {"dim", r.dim},
                {"ht_bound", r.ht_bound},
                {"distance", r.distance ? json(*r.distance) : json("skipped")},
                {"status", r.mismatches.empty() ? "match" : "mismatch"}};
    if (!r.mismatches.empty()) out["mismatches"] = r.mismatches;
    return out;
}

const char* builtin_fixture(const std::string& name) {
    if (name == "table1.json") return fixture_data::table1;
    if (name == "bch_n16.json") return fixture_data::bch_n16;
    if (name == "bch_n16_trace.json") return fixture_data::bch_n16_trace;
    if (name == "ht_n10.json") return fixture_data::ht_n10;
    if (name == "ht_n10_expected.json") return fixture_data::ht_n10_expected;
    return nullptr;
}

}  // namespace skewcodes::cli
