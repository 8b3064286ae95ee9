#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>

#include "fixture_checks.hpp"
#include "report.hpp"
#include "skewcodes/linearized.hpp"

namespace skewcodes::cli {

namespace {

struct Job {
    JobConfig cfg;
    std::string hash;
};

Job load_job(const Options& opt) {
    if (!opt.config) throw ValidationError("--config is required for this command");
    Job j{parse_config(read_json_file(*opt.config), opt.overrides), {}};
    j.hash = config_hash(j.cfg.canonical);
    return j;
}

json load_fixture(const Options& opt, const std::string& name) {
    if (opt.fixtures) return read_json_file(*opt.fixtures + "/" + name);
    return json::parse(builtin_fixture(name));
}

void emit(const Options& opt, std::ostream& out, const json& record) {
    if (opt.record)
        out << record.dump(2) << "\n";
    else
        out << render_text(record);
}

int cmd_build(const Options& opt, std::ostream& out) {
    const Job job = load_job(opt);
    const BuiltCode b = build(job.cfg);
    emit(opt, out, envelope("build", job.hash, code_report(b.code)));
    return exit_ok;
}

int cmd_bound(const Options& opt, std::ostream& out) {
    const Job job = load_job(opt);
    const BuiltCode b = build(job.cfg);
    const BoundResult r = ht_bound(b.code.T_closed);
    json res = {{"T_closed", b.code.T_closed.indices},
                {"n", b.code.n},
                {"designed_distance", b.code.designed_distance},
                {"ht_bound", r.bound},
                {"witness", params(r.witness)},
                {"singleton_bound", b.code.n - b.code.dim + 1}};
    emit(opt, out, envelope("bound", job.hash, res));
    return exit_ok;
}

int cmd_encode(const Options& opt, std::ostream& out) {
    const Job job = load_job(opt);
    const BuiltCode b = build(job.cfg);
    json items = json::array();
    for (const auto& m : job.cfg.task.messages) {
        const SkewPolynomial msg = parse_message(b.code, m);
        const Word c = encode(b.code, msg);
        items.push_back({{"message", polynomial(msg)},
                         {"codeword", elements(c)},
                         {"codeword_polynomial", polynomial(word_polynomial(b.tower->sigma(), c))}});
    }
    emit(opt, out, envelope("encode", job.hash, {{"n", b.code.n}, {"dim", b.code.dim}, {"encoded", items}}));
    return exit_ok;
}

int cmd_decode(const Options& opt, std::ostream& out) {
    const Job job = load_job(opt);
    const BuiltCode b = build(job.cfg);
    if (!b.code.bch_t) throw ValidationError("decode needs code.mode = \"bch\"");
    std::vector<Word> words;
    for (const auto& w : job.cfg.task.words) words.push_back(parse_word(b.code, w));
    const auto reports = decode_batch(b.code, words, job.cfg.task.jobs);
    json items = json::array();
    int failures = 0;
    for (const auto& r : reports) {
        items.push_back(decode_report(r));
        failures += r.status != DecodeStatus::ok;
    }
    const RsContext ctx = rs_context(b.code);
    json res = {{"n", b.code.n},
                {"t", ctx.t},
                {"u", ctx.u},
                {"tau", ctx.tau},
                {"g_prime", polynomial(ctx.g_prime, "y")},
                {"decoded", items},
                {"failures", failures}};
    emit(opt, out, envelope("decode", job.hash, res));
    return failures ? exit_decode : exit_ok;
}

int cmd_mindist(const Options& opt, std::ostream& out) {
    const Job job = load_job(opt);
    const BuiltCode b = build(job.cfg);
    const int d = min_distance_bruteforce(b.code, job.cfg.task.cap, job.cfg.task.jobs);
    json res = {{"n", b.code.n},
                {"dim", b.code.dim},
                {"min_distance", d},
                {"designed_distance", b.code.designed_distance},
                {"singleton_bound", b.code.n - b.code.dim + 1}};
    emit(opt, out, envelope("mindist", job.hash, res));
    return exit_ok;
}

int cmd_table(const Options& opt, std::ostream& out) {
    const json doc = opt.config ? read_json_file(*opt.config) : load_fixture(opt, "table1.json");
    if (!doc.is_object() || !doc.contains("rows") || !doc.at("rows").is_array())
        throw ValidationError("table: expected an object with a 'rows' array");
    const std::uint64_t cap = opt.overrides.cap.value_or(std::uint64_t{1} << 24);
    const int jobs = opt.overrides.jobs.value_or(0);
    json rows = json::array();
    int matched = 0;
    for (const auto& row : doc.at("rows")) {
        const RowCheck rc = check_table_row(row, cap, jobs);
        matched += rc.mismatches.empty();
        rows.push_back(row_record(rc));
    }
    json canonical = doc;
    canonical["cap"] = cap;
    const int total = static_cast<int>(doc.at("rows").size());
    json res = {{"rows", rows}, {"matched", std::to_string(matched) + "/" + std::to_string(total)}};
    emit(opt, out, envelope("table", config_hash(canonical), res));
    return matched == total ? exit_ok : exit_mismatch;
}

// Self-test sections.

struct Section {
    std::string anchor;
    std::string title;
    int passed = 0;
    int total = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++total;
        if (ok)
            ++passed;
        else if (first_failure.empty())
            first_failure = what;
    }
    void merge(const Comparison& c) {
        total += c.checks;
        passed += c.checks - static_cast<int>(c.mismatches.size());
        if (!c.ok() && first_failure.empty()) first_failure = c.mismatches.front();
    }
};

using Rng = std::mt19937_64;

FieldElement random_element(const Field& F, Rng& rng) { return F.element(rng() % F.order()); }

FieldElement random_nonzero(const Field& F, Rng& rng) { return F.element(1 + rng() % (F.order() - 1)); }

SkewPolynomial random_poly(const FrobeniusMap& tw, int degree, Rng& rng) {
    std::vector<FieldElement> c;
    for (int i = 0; i < degree; ++i) c.push_back(random_element(tw.field(), rng));
    c.push_back(random_nonzero(tw.field(), rng));
    return SkewPolynomial(tw, std::move(c));
}

void st_field(Section& sec, Rng& rng) {
    for (const auto& [p, m] : {std::pair{2u, 8u}, {3u, 4u}, {5u, 3u}}) {
        auto F = Field::make({p, conway_polynomial(p, m), "a"});
        const FrobeniusMap fr(*F, 1);
        for (int i = 0; i < 50; ++i) {
            const FieldElement x = random_nonzero(*F, rng), y = random_element(*F, rng);
            sec.check((x * x.inv()).is_one(), "x * x^-1 = 1");
            sec.check(fr(x * y) == fr(x) * fr(y) && fr(x + y) == fr(x) + fr(y), "Frobenius is a field map");
            sec.check(F->parse(F->format(x)) == x, "format/parse round trip");
        }
    }
    bool rejected = false;
    try {
        Field::make({2, {1, 0, 1}, "a"});  // x^2 + 1 = (x + 1)^2
    } catch (const ValidationError&) {
        rejected = true;
    }
    sec.check(rejected, "reducible modulus rejected");
}

void st_tower(Section& sec, const Tower& tw) {
    const Field& L = tw.L();
    for (Code c = 0; c < L.order(); ++c) {
        const FieldElement y = L.element(c);
        sec.check(tw.theta()(tw.embed(y)) == tw.embed(tw.sigma()(y)), "theta o eps = eps o sigma");
        sec.check(tw.pull_back(tw.embed(y)) == y, "pull_back o eps = id");
    }
}

void st_division(Section& sec, const FrobeniusMap& th, Rng& rng) {
    for (int i = 0; i < 50; ++i) {
        const auto f = random_poly(th, static_cast<int>(rng() % 9), rng);
        const auto g = random_poly(th, static_cast<int>(rng() % 5), rng);
        const auto r = right_divmod(f, g), l = left_divmod(f, g);
        sec.check(r.quotient * g + r.remainder == f && r.remainder.degree() < g.degree(), "right division");
        sec.check(g * l.quotient + l.remainder == f && l.remainder.degree() < g.degree(), "left division");
    }
}

void st_bezout(Section& sec, const FrobeniusMap& th, Rng& rng) {
    for (int i = 0; i < 50; ++i) {
        const auto h = random_poly(th, static_cast<int>(rng() % 3), rng);
        const auto f = random_poly(th, static_cast<int>(rng() % 5), rng) * h;
        const auto g = random_poly(th, static_cast<int>(rng() % 5), rng) * h;
        const Bezout bz = extended_gcrd(f, g);
        sec.check(bz.u * f + bz.v * g == bz.gcrd && bz.gcrd.is_monic(), "u f + v g = gcrd");
        sec.check(right_divides(bz.gcrd, f) && right_divides(bz.gcrd, g) && right_divides(h.monic(), bz.gcrd),
                  "gcrd divides both and is divisible by common factor");
        const auto m = lclm(f, g);
        sec.check(m.degree() == f.degree() + g.degree() - bz.gcrd.degree(), "deg lclm law");
        sec.check(right_divides(f, m) && right_divides(g, m), "lclm is a common left multiple");
    }
}

void st_pseudobound(Section& sec, const Tower& tw, Rng& rng) {
    for (int i = 0; i < 20; ++i) {
        const auto f = random_poly(tw.theta(), 1 + static_cast<int>(rng() % 3), rng);
        const auto pb = pseudobound(f, tw.pi(), tw.s());
        sec.check(galois_twist(pb, tw.pi()) == pb, "pseudobound is pi-fixed");
        sec.check(pseudobound(pb, tw.pi(), tw.s()) == pb, "pseudobound is idempotent");
        sec.check(right_divides(f, pb) && has_coefficients_in_L(tw, pb), "f right-divides its pseudobound");
    }
}

void st_table(Section& sec, const json& table) {
    for (const auto& row : table.at("rows")) {
        const RowCheck rc = check_table_row(row, std::uint64_t{1} << 16, 0);
        sec.check(rc.mismatches.empty(), "row " + std::to_string(rc.id) + ": " +
                                             (rc.mismatches.empty() ? std::string() : rc.mismatches.front()));
    }
}

void st_random_decode(Section& sec, const SkewCyclicCode& code, Rng& rng) {
    const RsContext ctx = rs_context(code);
    const Field& L = code.L();
    for (int trial = 0; trial < 100; ++trial) {
        Word m(code.dim);
        for (auto& x : m) x = random_element(L, rng);
        const Word c = encode(code, m);
        Word v = c;
        const int w = static_cast<int>(rng() % (ctx.tau + 1));
        std::vector<int> pos(code.n);
        for (int i = 0; i < code.n; ++i) pos[i] = i;
        std::shuffle(pos.begin(), pos.end(), rng);
        for (int j = 0; j < w; ++j) v[pos[j]] += random_nonzero(L, rng);
        const DecodeReport rep = decode_bch(code, ctx, v);
        sec.check(rep.status == DecodeStatus::ok && rep.codeword == c, "random decode within tau");
    }
}

void st_linearized(Section& sec, const FrobeniusMap& th, Rng& rng) {
    const Field& F = th.field();
    for (int i = 0; i < 50; ++i) {
        const auto f = random_poly(th, static_cast<int>(rng() % 5), rng);
        const auto g = random_poly(th, static_cast<int>(rng() % 5), rng);
        sec.check(linearize(f * g) == compose(linearize(f), linearize(g)), "Phi(f g) = Phi(f) o Phi(g)");
    }
    for (int i = 0; i < 5; ++i) {
        const auto f = random_poly(th, 1 + static_cast<int>(rng() % 4), rng);
        const LinearizedPoly Ff = linearize(f);
        bool ok = true;
        for (Code c = 1; c < F.order(); ++c) {
            const FieldElement a = F.element(c);
            ok &= Ff(a).is_zero() == right_eval(f, a.inv() * th(a)).is_zero();
        }
        sec.check(ok, "Phi(f)(a) = 0 iff a^-1 theta(a) is a right root");
    }
}

int cmd_selftest(const Options& opt, std::ostream& out) {
    Rng rng(0x5eed0000u + opt.overrides.seed.value_or(0));
    std::vector<Section> secs;
    auto run = [&](const std::string& anchor, const std::string& title, const std::function<void(Section&)>& body) {
        Section s;
        s.anchor = anchor;
        s.title = title;
        try {
            body(s);
        } catch (const std::exception& e) {
            s.check(false, std::string("exception: ") + e.what());
        }
        secs.push_back(s);
    };

    const json bch_cfg = load_fixture(opt, "bch_n16.json");
    const json bch_trace = load_fixture(opt, "bch_n16_trace.json");
    const json ht_cfg = load_fixture(opt, "ht_n10.json");
    const json ht_expected = load_fixture(opt, "ht_n10_expected.json");
    const json table = load_fixture(opt, "table1.json");
    const BuiltCode bch = build(parse_config(bch_cfg));
    const FrobeniusMap& th = bch.tower->theta();
    auto F64 = Field::make({2, conway_polynomial(2, 6), "a"});
    const FrobeniusMap th64(*F64, 1);

    run("field.arith", "field arithmetic and Frobenius", [&](Section& s) { st_field(s, rng); });
    run("tower.embedding", "embedding intertwines sigma and theta", [&](Section& s) { st_tower(s, *bch.tower); });
    run("skewpoly.division", "left and right division", [&](Section& s) { st_division(s, th, rng); });
    run("skewpoly.bezout", "gcrd cofactors and lclm degree", [&](Section& s) { st_bezout(s, th, rng); });
    run("skewpoly.pseudobound", "pseudobound invariants", [&](Section& s) { st_pseudobound(s, *bch.tower, rng); });
    run("codes.table", "table rows: T, closure, dim, distance", [&](Section& s) { st_table(s, table); });
    run("codes.ht-example", "n = 10 generator", [&](Section& s) { s.merge(compare_ht_example(ht_cfg, ht_expected)); });
    run("decode.trace", "n = 16 decoding trace", [&](Section& s) { s.merge(compare_bch_trace(bch_cfg, bch_trace)); });
    run("decode.random", "random errors within tau", [&](Section& s) { st_random_decode(s, bch.code, rng); });
    run("linearized.phi", "Phi morphism and root correspondence", [&](Section& s) { st_linearized(s, th64, rng); });

    bool all = true;
    json recs = json::array();
    for (const auto& s : secs) {
        const bool ok = s.passed == s.total && s.first_failure.empty();
        all &= ok;
        json r = {{"anchor", s.anchor}, {"title", s.title}, {"passed", s.passed}, {"total", s.total}, {"ok", ok}};
        if (!ok) r["first_failure"] = s.first_failure;
        recs.push_back(r);
    }
    if (opt.record) {
        json canonical = {{"seed", opt.overrides.seed.value_or(0)}};
        out << envelope("selftest", config_hash(canonical), {{"sections", recs}, {"ok", all}}).dump(2) << "\n";
    } else {
        for (const auto& s : secs) {
            const bool ok = s.passed == s.total && s.first_failure.empty();
            out << (ok ? "PASS " : "FAIL ") << s.anchor << "  " << s.title << "  (" << s.passed << "/" << s.total << ")";
            if (!ok) out << "  " << s.first_failure;
            out << "\n";
        }
        out << (all ? "selftest: all sections passed\n" : "selftest: failures\n");
    }
    return all ? exit_ok : exit_mismatch;
}

}  // namespace

int run_command(const std::string& command, const Options& opt, std::ostream& out, std::ostream& err) {
    static const std::map<std::string, std::function<int(const Options&, std::ostream&)>> table = {
        {"build", cmd_build},     {"bound", cmd_bound}, {"encode", cmd_encode},     {"decode", cmd_decode},
        {"mindist", cmd_mindist}, {"table", cmd_table}, {"selftest", cmd_selftest},
    };
    auto fail = [&](const char* kind, const std::string& msg, int code) {
        if (opt.record)
            out << json{{"command", command}, {"version", SKEWCODES_VERSION}, {"error", {{"kind", kind}, {"message", msg}}}}
                       .dump(2)
                << "\n";
        else
            err << "error (" << kind << "): " << msg << "\n";
        return code;
    };
    const auto it = table.find(command);
    if (it == table.end()) return fail("validation", "unknown command '" + command + "'", exit_validation);
    try {
        return it->second(opt, out);
    } catch (const CapExceeded& e) {
        return fail("cap_exceeded", e.what(), exit_validation);
    } catch (const ValidationError& e) {
        return fail("validation", e.what(), exit_validation);
    } catch (const json::exception& e) {
        return fail("validation", e.what(), exit_validation);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1);
    }
}

}  // namespace skewcodes::cli
