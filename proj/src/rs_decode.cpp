#include "skewcodes/rs_decode.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "skewcodes/linearized.hpp"

namespace skewcodes {

namespace {

int inverse_mod(int t, int n) {
    t = static_cast<int>(mod_floor(t, n));
    for (int u = 1; u < n; ++u)
        if (static_cast<std::int64_t>(t) * u % n == 1) return u;
    if (n == 1) return 0;
    throw ValidationError("t must be invertible mod n");
}

}  // namespace

RsContext rs_generator(const FrobeniusMap& theta, const FieldElement& alpha, int n, int t, int delta) {
    if (n < 2 || std::gcd(mod_floor(t, n), static_cast<std::int64_t>(n)) != 1)
        throw ValidationError("gcd(t, n) must be 1");
    if (delta < 2 || delta > n) throw ValidationError("delta out of range");
    RsContext ctx;
    ctx.n = n;
    ctx.t = static_cast<int>(mod_floor(t, n));
    ctx.u = inverse_mod(ctx.t, n);
    ctx.delta = delta;
    ctx.tau = (delta - 1) / 2;
    ctx.rho = theta.pow(ctx.t);
    ctx.alpha = alpha;
    ctx.beta_prime = alpha.inv() * ctx.rho(alpha);
    std::vector<FieldElement> roots;
    for (int i = 0; i < delta - 1; ++i) roots.push_back(ctx.rho.apply(ctx.beta_prime, i));
    ctx.g_prime = lclm_linear(ctx.rho, roots);
    if (ctx.g_prime.degree() != delta - 1) throw std::logic_error("internal invariant violated: deg g' = delta - 1");

    const Field& M = theta.field();
    const unsigned m = M.degree(), p = M.characteristic();
    const auto kbasis = fixed_field_basis(ctx.rho);
    ctx.kdeg = static_cast<unsigned>(kbasis.size());
    if (static_cast<unsigned>(n) * ctx.kdeg != m) throw ValidationError("rho must have order n");
    std::vector<gfp::Vec> aug(m, gfp::Vec(2 * m, 0));
    FieldElement orbit = alpha;
    for (int k = 0; k < n; ++k, orbit = ctx.rho(orbit))
        for (unsigned j = 0; j < ctx.kdeg; ++j) {
            const auto col = to_vec(kbasis[j] * orbit);
            for (unsigned r = 0; r < m; ++r) aug[r][k * ctx.kdeg + j] = col[r];
        }
    for (unsigned r = 0; r < m; ++r) aug[r][m + r] = 1;
    auto red = gfp::row_reduce(std::move(aug), p);
    if (red.size() != m || red[m - 1][m - 1] != 1) throw ValidationError("alpha is not a normal element");
    for (auto& row : red) row.erase(row.begin(), row.begin() + m);
    ctx.coord_inverse = std::move(red);
    return ctx;
}

RsContext rs_context(const SkewCyclicCode& code) {
    if (!code.bch_t) throw ValidationError("decoding needs a BCH code");
    RsContext ctx = rs_generator(code.tower->theta(), code.alpha, code.n, *code.bch_t, code.params.delta);
    const SkewPolynomial phi_g = phi_map(code.g_T, ctx.t, ctx.n);
    const SkewPolynomial expect = gcrd(phi_g, SkewPolynomial::x_pow_minus_one(ctx.rho, ctx.n));
    if (expect != ctx.g_prime) throw std::logic_error("internal invariant violated: g' = gcrd(phi(g_T), y^n - 1)");
    return ctx;
}

std::vector<FieldElement> permute(const std::vector<FieldElement>& v, int t) {
    const int n = static_cast<int>(v.size());
    if (n == 0) return {};
    if (std::gcd(mod_floor(t, n), static_cast<std::int64_t>(n)) != 1) throw ValidationError("gcd(t, n) must be 1");
    std::vector<FieldElement> out(n);
    for (int i = 0; i < n; ++i) out[i] = v[mod_floor(static_cast<std::int64_t>(i) * t, n)];
    return out;
}

std::vector<FieldElement> unpermute(const std::vector<FieldElement>& v, int t) {
    const int n = static_cast<int>(v.size());
    if (n == 0) return {};
    if (std::gcd(mod_floor(t, n), static_cast<std::int64_t>(n)) != 1) throw ValidationError("gcd(t, n) must be 1");
    std::vector<FieldElement> out(n);
    for (int i = 0; i < n; ++i) out[mod_floor(static_cast<std::int64_t>(i) * t, n)] = v[i];
    return out;
}

SkewPolynomial phi_map(const SkewPolynomial& f, int t, int n) {
    const int u = inverse_mod(t, n);
    const Field& F = f.field();
    std::vector<Code> out(n, 0);
    const auto& c = f.codes();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto j = mod_floor(static_cast<std::int64_t>(i) * u, n);
        out[j] = F.add(out[j], c[i]);
    }
    return SkewPolynomial::from_codes(f.twist().pow(t), std::move(out));
}

SkewPolynomial phi_inverse(const SkewPolynomial& f, const FrobeniusMap& theta, int t, int n) {
    if (f.twist() != theta.pow(t)) throw ValidationError("phi_inverse expects a polynomial in M[y; theta^t]");
    const Field& F = f.field();
    std::vector<Code> out(n, 0);
    const auto& c = f.codes();
    for (std::size_t j = 0; j < c.size(); ++j) {
        const auto i = mod_floor(static_cast<std::int64_t>(j) * t, n);
        out[i] = F.add(out[i], c[j]);
    }
    return SkewPolynomial::from_codes(theta, std::move(out));
}

std::vector<FieldElement> syndromes(const std::vector<FieldElement>& w, const RsContext& ctx) {
    if (static_cast<int>(w.size()) != ctx.n) throw ValidationError("word has the wrong length");
    const Field& F = ctx.rho.field();
    // orbit[k] = rho^k(alpha), k < n + delta.
    std::vector<FieldElement> orbit{ctx.alpha};
    for (int k = 1; k < ctx.n + ctx.delta; ++k) orbit.push_back(ctx.rho(orbit.back()));
    std::vector<FieldElement> s;
    for (int i = 0; i < ctx.delta - 1; ++i) {
        FieldElement acc = F.zero();
        for (int j = 0; j < ctx.n; ++j)
            if (!w[j].is_zero()) acc += w[j] * orbit[i + j];
        s.push_back(acc);
    }
    return s;
}

Matrix syndrome_matrix(const std::vector<FieldElement>& s, int tau, const FrobeniusMap& rho) {
    if (static_cast<int>(s.size()) < 2 * tau) throw ValidationError("not enough syndromes");
    Matrix h(rho.field(), tau + 1, tau);
    for (int i = 0; i <= tau; ++i)
        for (int j = 0; j < tau; ++j) h.set(i, j, rho.apply(s[i + j], -j));
    return h;
}

LocatorResult locator(const Matrix& h, const FrobeniusMap& rho) {
    LocatorResult out;
    const Field& F = h.field();
    out.nu = static_cast<int>(rank(h));
    if (out.nu == 0) {
        out.echelon = h.top_rows(1);
        out.lambda = SkewPolynomial::one(rho);
        return out;
    }
    const int nu = out.nu;
    out.echelon = reduced_column_echelon(h.top_rows(nu + 1));
    for (int i = 0; i < nu && out.ok; ++i)
        for (int j = 0; j < static_cast<int>(h.cols()); ++j)
            if (out.echelon.code(i, j) != (i == j ? 1u : 0u)) {
                out.ok = false;
                break;
            }
    for (int j = nu; j < static_cast<int>(h.cols()) && out.ok; ++j)
        if (out.echelon.code(nu, j) != 0) out.ok = false;
    std::vector<FieldElement> lam(nu + 1, F.zero());
    for (int i = 0; i < nu; ++i) lam[i] = -out.echelon.at(nu, i);
    lam[nu] = F.one();
    out.lambda = SkewPolynomial(rho, std::move(lam));
    return out;
}

std::vector<int> right_root_positions(const SkewPolynomial& lambda, const RsContext& ctx) {
    std::vector<int> pos;
    FieldElement root = ctx.beta_prime;
    for (int k = 0; k < ctx.n; ++k, root = ctx.rho(root))
        if (right_eval(lambda, root).is_zero()) pos.push_back(k);
    return pos;
}

std::optional<std::vector<int>> error_positions(const SkewPolynomial& lambda, const RsContext& ctx) {
    const auto basis = root_space(linearize(lambda));
    if (static_cast<int>(basis.size()) != lambda.degree()) return std::nullopt;
    const unsigned p = ctx.rho.field().characteristic();
    std::vector<bool> hit(ctx.n, false);
    for (const auto& v : basis) {
        const auto x = to_vec(v);
        for (std::size_t c = 0; c < ctx.coord_inverse.size(); ++c) {
            unsigned acc = 0;
            for (std::size_t r = 0; r < x.size(); ++r) acc = (acc + ctx.coord_inverse[c][r] * x[r]) % p;
            if (acc) hit[c / ctx.kdeg] = true;
        }
    }
    std::vector<int> pos;
    for (int k = 0; k < ctx.n; ++k)
        if (hit[k]) pos.push_back(k);
    return pos;
}

ErrorValues error_values(const std::vector<int>& positions, const std::vector<FieldElement>& s, const RsContext& ctx) {
    const int nu = static_cast<int>(positions.size());
    if (nu > static_cast<int>(s.size())) throw ValidationError("more positions than syndromes");
    ErrorValues out{Matrix(ctx.rho.field(), nu, nu), {s.begin(), s.begin() + nu}, std::nullopt};
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nu; ++j) out.system.set(i, j, ctx.rho.apply(ctx.alpha, i + positions[j]));
    out.values = solve(out.system, out.rhs);
    return out;
}

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::ok: return "ok";
        case DecodeStatus::too_many_errors: return "too_many_errors";
        case DecodeStatus::not_in_L: return "not_in_L";
        case DecodeStatus::inconsistent: return "inconsistent";
    }
    return "unknown";
}

DecodeReport decode_bch(const SkewCyclicCode& code, const RsContext& ctx, const Word& v) {
    if (static_cast<int>(v.size()) != code.n) throw ValidationError("word has the wrong length");
    const Tower& tw = *code.tower;
    DecodeReport rep;
    rep.received = v;
    auto fail = [&](DecodeStatus st, const char* stage) {
        rep.status = st;
        rep.stage = stage;
        return rep;
    };
    std::vector<FieldElement> lifted;
    for (const auto& a : v) lifted.push_back(tw.embed(a));
    rep.permuted = permute(lifted, ctx.t);
    rep.syndromes = syndromes(rep.permuted, ctx);
    rep.syndrome_matrix = syndrome_matrix(rep.syndromes, ctx.tau, ctx.rho);
    const LocatorResult loc = locator(rep.syndrome_matrix, ctx.rho);
    rep.nu = loc.nu;
    rep.echelon = loc.echelon;
    rep.locator = loc.lambda;
    if (!loc.ok) return fail(DecodeStatus::too_many_errors, "locator");
    const auto pos = error_positions(loc.lambda, ctx);
    if (!pos) return fail(DecodeStatus::too_many_errors, "positions");
    rep.positions_y = *pos;
    if (static_cast<int>(rep.positions_y.size()) < loc.nu || static_cast<int>(rep.positions_y.size()) > ctx.tau)
        return fail(DecodeStatus::too_many_errors, "positions");
    ErrorValues ev = error_values(rep.positions_y, rep.syndromes, ctx);
    rep.system = ev.system;
    rep.rhs = ev.rhs;
    if (!ev.values) return fail(DecodeStatus::too_many_errors, "values");
    rep.values = *ev.values;
    rep.error.assign(code.n, code.L().zero());
    for (std::size_t j = 0; j < rep.positions_y.size(); ++j) {
        const int x = static_cast<int>(mod_floor(static_cast<std::int64_t>(ctx.t) * rep.positions_y[j], code.n));
        rep.positions_x.push_back(x);
        auto b = tw.pull_back(rep.values[j]);
        if (!b) return fail(DecodeStatus::not_in_L, "values");
        rep.error[x] = *b;
    }
    rep.codeword.resize(code.n);
    for (int i = 0; i < code.n; ++i) rep.codeword[i] = v[i] - rep.error[i];
    if (!is_codeword(code, rep.codeword)) return fail(DecodeStatus::inconsistent, "verify");
    rep.message = message_of(code, rep.codeword);
    return rep;
}

DecodeReport decode_bch(const SkewCyclicCode& code, const Word& v) { return decode_bch(code, rs_context(code), v); }

std::vector<DecodeReport> decode_batch(const SkewCyclicCode& code, const std::vector<Word>& words, int jobs) {
    const RsContext ctx = rs_context(code);
    std::vector<DecodeReport> out(words.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::size_t i = 0; i < words.size(); ++i) out[i] = decode_bch(code, ctx, words[i]);
    return out;
}

std::vector<DecodeReport> decode_batch_serial(const SkewCyclicCode& code, const std::vector<Word>& words) {
    const RsContext ctx = rs_context(code);
    std::vector<DecodeReport> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(decode_bch(code, ctx, w));
    return out;
}

}  // namespace skewcodes
