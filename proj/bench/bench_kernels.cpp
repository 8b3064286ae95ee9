// Wall-clock comparison of the parallel kernels against their serial references.

#include <chrono>
#include <cstdio>
#include <random>

#include <CLI11.hpp>

#include "config.hpp"
#include "skewcodes/rs_decode.hpp"

using namespace skewcodes;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
    }
    return best;
}

void row(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-22s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
                serial / parallel, agree ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skewcodes kernel benchmark"};
    std::string config = std::string(SKEWCODES_FIXTURE_DIR) + "/bch_n16.json";
    std::string distance_config = std::string(SKEWCODES_FIXTURE_DIR) + "/ht_n10.json";
    int words = 2000, reps = 3, jobs = 0;
    std::uint64_t seed = 1;
    app.add_option("--config", config, "decoding code configuration");
    app.add_option("--distance-config", distance_config, "brute-force distance code configuration");
    app.add_option("--words", words, "received words per decode batch");
    app.add_option("--reps", reps, "repetitions, best time reported");
    app.add_option("--jobs", jobs, "OpenMP threads, 0 for default");
    app.add_option("--seed", seed, "error pattern seed");
    CLI11_PARSE(app, argc, argv);

    const auto small = cli::build(cli::parse_config(cli::read_json_file(distance_config)));
    int d_ser = 0, d_par = 0;
    const double t_ser = best_of(reps, [&] { d_ser = min_distance_bruteforce_serial(small.code); });
    const double t_par =
        best_of(reps, [&] { d_par = min_distance_bruteforce(small.code, std::uint64_t{1} << 24, jobs); });
    row("min_distance", t_ser, t_par, d_ser == d_par);

    const auto built = cli::build(cli::parse_config(cli::read_json_file(config)));
    const auto& code = built.code;
    const auto& L = code.L();

    std::mt19937_64 rng(seed);
    const RsContext ctx = rs_context(code);
    std::vector<Word> batch;
    for (int i = 0; i < words; ++i) {
        Word m(code.dim);
        for (auto& x : m) x = L.element(rng() % L.order());
        Word v = encode(code, m);
        const int weight = static_cast<int>(rng() % (ctx.tau + 1));
        for (int j = 0; j < weight; ++j) v[rng() % code.n] += L.element(1 + rng() % (L.order() - 1));
        batch.push_back(std::move(v));
    }
    std::vector<DecodeReport> r_ser, r_par;
    const double b_ser = best_of(reps, [&] { r_ser = decode_batch_serial(code, batch); });
    const double b_par = best_of(reps, [&] { r_par = decode_batch(code, batch, jobs); });
    bool agree = r_ser.size() == r_par.size();
    for (std::size_t i = 0; agree && i < r_ser.size(); ++i)
        agree = r_ser[i].status == r_par[i].status && r_ser[i].codeword == r_par[i].codeword;
    row("decode_batch", b_ser, b_par, agree);
    return 0;
}
