#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "helpers.hpp"
#include "report.hpp"

using namespace skewcodes;
using namespace skewcodes::cli;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

struct Run {
    int rc;
    std::string out, err;
};

fs::path scratch_dir() {
    const fs::path d = fs::temp_directory_path() / ("skewcodes_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

std::string write_json(const std::string& name, const json& j) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p) << j.dump(2);
    return p.string();
}

Run run(const std::string& cmd, Options opt) {
    std::ostringstream out, err;
    const int rc = run_command(cmd, opt, out, err);
    return {rc, out.str(), err.str()};
}

Run run_config(const std::string& cmd, const json& cfg, bool record = true) {
    Options opt;
    opt.config = write_json(cmd + ".json", cfg);
    opt.record = record;
    return run(cmd, opt);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build report of the n = 16 code") {
    const Run r = run_config("build", load("bch_n16.json"));
    REQUIRE(r.rc == exit_ok);
    const json j = json::parse(r.out);
    CHECK(j["result"]["dim"] == 4);
    CHECK(j["result"]["g_bar"]["coeffs"].size() == 13);
    CHECK(j["result"]["T_closed"] == json({0, 1, 3, 4, 6, 7, 8, 9, 11, 12, 14, 15}));
    CHECK(j["version"] == SKEWCODES_VERSION);
    CHECK(j["config_hash"].get<std::string>().size() == 16);
}

TEST_CASE("schema errors exit with the validation code") {
    json base = load("bch_n16.json");
    auto expect_validation = [](const json& cfg) {
        const Run r = run_config("build", cfg);
        CHECK(r.rc == exit_validation);
        const json j = json::parse(r.out);
        CHECK(j["error"]["kind"] == "validation");
    };
    json c = base;
    c["field"]["L_modulus"] = json({1, 0, 1, 0, 0, 0, 0, 0, 1});  // reducible
    expect_validation(c);
    c = base;
    c["field"]["L_modulus"] = json({1, 0, 1});
    expect_validation(c);
    c = base;
    c["field"]["M_modulus"] = "bogus";
    expect_validation(c);
    c = base;
    c["field"]["colour"] = 1;
    expect_validation(c);
    c = base;
    c["code"]["delta"] = 40;
    expect_validation(c);
    c = base;
    c["code"]["t"] = 4;
    expect_validation(c);
    c = base;
    c["field"]["epsilon"] = "a^77";
    expect_validation(c);
    c = base;
    c["field"]["alpha"] = "a^5";
    expect_validation(c);
    c = base;
    c.erase("code");
    expect_validation(c);

    Options opt;
    opt.record = true;
    opt.config = (scratch_dir() / "missing.json").string();
    CHECK(run("build", opt).rc == exit_validation);
    std::ofstream(scratch_dir() / "broken.json") << "{ not json";
    opt.config = (scratch_dir() / "broken.json").string();
    CHECK(run("build", opt).rc == exit_validation);
}

TEST_CASE("config hash ignores formatting, key order and jobs") {
    const json a = load("bch_n16.json");
    const json b = json::parse(a.dump());
    Overrides o1, o2;
    o2.jobs = 3;
    CHECK(config_hash(parse_config(a, o1).canonical) == config_hash(parse_config(b, o2).canonical));
    Overrides o3;
    o3.seed = 9;
    CHECK(config_hash(parse_config(a, o1).canonical) != config_hash(parse_config(a, o3).canonical));
}

TEST_CASE("encode and decode reproduce the worked example") {
    const json trace = load("bch_n16_trace.json");
    const Run e = run_config("encode", load("bch_n16.json"));
    REQUIRE(e.rc == exit_ok);
    json cw = json::parse(e.out)["result"]["encoded"][0]["codeword"];
    std::vector<std::string> asc(trace["codeword_desc"].rbegin(), trace["codeword_desc"].rend());
    CHECK(cw == json(asc));

    const Run d = run_config("decode", load("bch_n16.json"));
    REQUIRE(d.rc == exit_ok);
    const json rep = json::parse(d.out)["result"]["decoded"][0];
    CHECK(rep["status"] == "ok");
    CHECK(rep["positions_x"] == json({13, 9, 5}));
    CHECK(rep["message"]["text"] == "b^56x^3 + bx^2 + b^13x + b^34");
}

TEST_CASE("decode failures exit with the decode code") {
    json cfg = load("bch_n16.json");
    // weight 5 error on the zero codeword, well beyond tau = 3
    cfg["task"]["words"] = json::array({"x^15 + x^11 + bx^7 + b^2x^3 + b^3x"});
    const Run r = run_config("decode", cfg);
    const json j = json::parse(r.out);
    const json rep = j["result"]["decoded"][0];
    if (rep["status"] == "ok") {
        CHECK(r.rc == exit_ok);
    } else {
        CHECK(r.rc == exit_decode);
        CHECK(rep.contains("failed_stage"));
    }
    CHECK(rep["status"] != "ok");
}

TEST_CASE("bound and mindist") {
    const Run b = run_config("bound", load("ht_n10.json"));
    REQUIRE(b.rc == exit_ok);
    CHECK(json::parse(b.out)["result"]["ht_bound"].get<int>() >= 5);
    const Run m = run_config("mindist", load("ht_n10.json"));
    REQUIRE(m.rc == exit_ok);
    CHECK(json::parse(m.out)["result"]["min_distance"] == 9);
    Options opt;
    opt.config = write_json("cap.json", load("bch_n16.json"));
    opt.overrides.cap = 100;
    opt.record = true;
    const Run c = run("mindist", opt);
    CHECK(c.rc == exit_validation);
    CHECK(json::parse(c.out)["error"]["kind"] == "cap_exceeded");
}

TEST_CASE("table command") {
    Options opt;
    opt.record = true;
    const Run full = run("table", opt);
    CHECK(full.rc == exit_ok);
    CHECK(json::parse(full.out)["result"]["matched"] == "13/13");

    opt.config = write_json("empty_table.json", json{{"rows", json::array()}});
    const Run empty = run("table", opt);
    CHECK(empty.rc == exit_ok);
    CHECK(json::parse(empty.out)["result"]["matched"] == "0/0");

    json t = load("table1.json");
    t["rows"][2]["T_closed"] = json({0, 1, 3, 4, 5, 6, 8});
    opt.config = write_json("bad_table.json", t);
    const Run bad = run("table", opt);
    CHECK(bad.rc == exit_mismatch);
    const json rows = json::parse(bad.out)["result"]["rows"];
    CHECK(rows[2]["status"] == "mismatch");
    CHECK(rows[2]["id"] == 3);
    CHECK(rows[0]["status"] == "match");
}

TEST_CASE("selftest is deterministic and catches corrupted fixtures") {
    Options opt;
    const Run a = run("selftest", opt);
    const Run b = run("selftest", opt);
    CHECK(a.rc == exit_ok);
    CHECK(a.out == b.out);

    const fs::path dir = scratch_dir() / "fixtures";
    fs::create_directories(dir);
    for (const char* f : {"table1.json", "bch_n16.json", "bch_n16_trace.json", "ht_n10.json", "ht_n10_expected.json"})
        fs::copy_file(fixture(f), dir / f, fs::copy_options::overwrite_existing);
    json trace = load("bch_n16_trace.json");
    trace["values"][1] = "a^36495";
    std::ofstream(dir / "bch_n16_trace.json") << trace.dump(2);
    opt.fixtures = dir.string();
    const Run c = run("selftest", opt);
    CHECK(c.rc == exit_mismatch);
    CHECK(c.out.find("FAIL decode.trace") != std::string::npos);
    CHECK(c.out.find("values") != std::string::npos);
}

TEST_CASE("text rendering") {
    const json j = {{"a", 1}, {"b", json::array({1, 2})}, {"c", {{"text", "x + 1"}, {"coeffs", json::array({"1", "1"})}}}};
    CHECK(render_text(j) == "a: 1\nb: [1, 2]\nc: x + 1\n");
}

}
