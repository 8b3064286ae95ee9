#include "properties.hpp"

#include "helpers.hpp"
#include "skewcodes/linearized.hpp"
#include "skewcodes/rs_decode.hpp"

using namespace skewcodes;
using namespace testutil;

namespace props {

namespace {

// Rings used for the polynomial laws: even and odd characteristic, a twist
// of order 16 and one with a large fixed field.
struct Ring {
    std::shared_ptr<const Field> field;
    FrobeniusMap theta;
};

std::vector<Ring> rings() {
    std::vector<Ring> out;
    auto add = [&](unsigned p, unsigned m, unsigned e) {
        auto F = conway_field(p, m);
        out.push_back({F, FrobeniusMap(*F, e)});
    };
    add(2, 16, 3);
    add(2, 12, 4);
    add(3, 4, 1);
    add(5, 3, 2);
    return out;
}

std::string ctx(int i, const Ring& r) {
    return "case " + std::to_string(i) + " GF(" + std::to_string(r.field->characteristic()) + "^" +
           std::to_string(r.field->degree()) + ")";
}

int rand_deg(Rng& rng, int hi) { return static_cast<int>(rng() % (hi + 1)); }

// K-basis of M given by random elements, K the fixed field of theta.
std::vector<FieldElement> random_k_basis(const FrobeniusMap& th, Rng& rng) {
    const Field& M = th.field();
    const auto kb = fixed_field_basis(th);
    const unsigned n = M.degree() / static_cast<unsigned>(kb.size());
    std::vector<FieldElement> basis, span;
    while (basis.size() < n) {
        const auto x = random_nonzero(M, rng);
        auto trial = span;
        for (const auto& k : kb) trial.push_back(k * x);
        if (gfp_rank(trial) != trial.size()) continue;
        basis.push_back(x);
        span = std::move(trial);
    }
    return basis;
}

}  // namespace

Result degree_laws(int cases) {
    Result r{"skewpoly degree and division laws"};
    const auto rs = rings();
    Rng rng(101);
    for (int i = 0; i < cases; ++i) {
        const Ring& R = rs[i % rs.size()];
        const auto f = random_poly(R.theta, rand_deg(rng, 8), rng);
        const auto g = random_poly(R.theta, rand_deg(rng, 6), rng);
        const auto c = ctx(i, R);
        r.check((f * g).degree() == f.degree() + g.degree(), c + ": deg(fg) = deg f + deg g");
        const auto rd = right_divmod(f, g), ld = left_divmod(f, g);
        r.check(rd.quotient * g + rd.remainder == f && rd.remainder.degree() < g.degree(), c + ": right division");
        r.check(g * ld.quotient + ld.remainder == f && ld.remainder.degree() < g.degree(), c + ": left division");
        r.check(right_divides(g, f * g) && !(f * g).is_zero(), c + ": g right-divides fg");
    }
    return r;
}

Result bezout_laws(int cases) {
    Result r{"skewpoly Bezout identity"};
    const auto rs = rings();
    Rng rng(202);
    for (int i = 0; i < cases; ++i) {
        const Ring& R = rs[i % rs.size()];
        const auto h = random_poly(R.theta, rand_deg(rng, 3), rng);
        const auto f = random_poly(R.theta, rand_deg(rng, 5), rng) * h;
        const auto g = random_poly(R.theta, rand_deg(rng, 5), rng) * h;
        const Bezout bz = extended_gcrd(f, g);
        const auto c = ctx(i, R);
        r.check(bz.gcrd.is_monic(), c + ": gcrd monic");
        r.check(bz.u * f + bz.v * g == bz.gcrd, c + ": u f + v g = gcrd");
        r.check(right_divides(bz.gcrd, f) && right_divides(bz.gcrd, g), c + ": gcrd divides both");
        r.check(right_divides(h.monic(), bz.gcrd), c + ": common right factor divides gcrd");
    }
    return r;
}

Result lclm_laws(int cases) {
    Result r{"skewpoly lclm laws"};
    const auto rs = rings();
    Rng rng(303);
    for (int i = 0; i < cases; ++i) {
        const Ring& R = rs[i % rs.size()];
        const auto h = random_poly(R.theta, rand_deg(rng, 2), rng);
        const auto f = random_poly(R.theta, rand_deg(rng, 4), rng) * h;
        const auto g = random_poly(R.theta, rand_deg(rng, 4), rng) * h;
        const auto m = lclm(f, g);
        const auto d = gcrd(f, g);
        const auto c = ctx(i, R);
        r.check(m.is_monic(), c + ": lclm monic");
        r.check(m.degree() == f.degree() + g.degree() - d.degree(), c + ": deg lclm = deg f + deg g - deg gcrd");
        r.check(right_divides(f, m) && right_divides(g, m), c + ": lclm is a common left multiple");
        r.check(lclm(g, f) == m, c + ": lclm symmetric");
    }
    return r;
}

Result circulant(int cases) {
    Result r{"circulant lemma nonsingularity"};
    Rng rng(404);
    const std::vector<std::pair<unsigned, unsigned>> fields = {{12, 1}, {12, 4}, {16, 3}, {10, 1}};
    for (int i = 0; i < cases; ++i) {
        const auto [m, e] = fields[i % fields.size()];
        auto M = conway_field(2, m);
        const FrobeniusMap th(*M, e);
        const auto basis = random_k_basis(th, rng);
        const int n = static_cast<int>(basis.size());
        const int t = 1 + static_cast<int>(rng() % n);
        std::vector<int> idx(n);
        for (int k = 0; k < n; ++k) idx[k] = k;
        std::shuffle(idx.begin(), idx.end(), rng);
        Matrix A(*M, t, t);
        for (int a = 0; a < t; ++a)
            for (int b = 0; b < t; ++b) A.set(a, b, th.apply(basis[idx[a]], b));
        r.check(rank(A) == static_cast<std::size_t>(t), "case " + std::to_string(i) + ": singular t = " + std::to_string(t));
    }
    return r;
}

Result rank_lower_bound(int cases) {
    Result r{"rank lower bound for stacked twisted blocks"};
    Rng rng(505);
    const std::vector<std::pair<unsigned, unsigned>> fields = {{12, 1}, {8, 1}, {10, 1}, {9, 1}};
    int done = 0;
    while (done < cases) {
        const auto [m, e] = fields[done % fields.size()];
        auto M = conway_field(2, m);
        const FrobeniusMap th(*M, e);
        const int n = static_cast<int>(th.order());
        const int t = 1 + static_cast<int>(rng() % 4);
        const int rr = static_cast<int>(rng() % 3);
        const int s1 = 1 + static_cast<int>(rng() % (n - 1));
        const int s2 = 1 + static_cast<int>(rng() % (n - 1));
        if (t + rr > n || std::gcd(s1, n) != 1 || std::gcd(s2, n) >= t + 1) continue;
        const auto basis = random_k_basis(th, rng);
        std::vector<int> idx(n);
        for (int k = 0; k < n; ++k) idx[k] = k;
        std::shuffle(idx.begin(), idx.end(), rng);
        for (int i = 0; i <= rr; ++i) {
            Matrix B(*M, t + rr, t * (i + 1));
            for (int a = 0; a < t + rr; ++a)
                for (int blk = 0; blk <= i; ++blk)
                    for (int b = 0; b < t; ++b)
                        B.set(a, blk * t + b, th.apply(basis[idx[a]], static_cast<std::int64_t>(b) * s1 + blk * s2));
            r.check(rank(B) >= static_cast<std::size_t>(t + i),
                    "case " + std::to_string(done) + ": rank(B_" + std::to_string(i) + ") < t + i");
        }
        ++done;
    }
    return r;
}

Result pseudobound_laws(int cases) {
    Result r{"pseudobound invariants"};
    Rng rng(606);
    const std::vector<std::shared_ptr<const Tower>> towers = {
        conway_tower(2, 1, 3, 4, 1, 1u), conway_tower(2, 1, 8, 2, 3, 3u), conway_tower(2, 2, 3, 3, 1, 1u),
        conway_tower(3, 1, 3, 4, 1, 1u)};
    for (int i = 0; i < cases; ++i) {
        const Tower& tw = *towers[i % towers.size()];
        const auto f = random_poly(tw.theta(), 1 + rand_deg(rng, 2), rng);
        const auto pb = pseudobound(f, tw.pi(), tw.s());
        const auto c = "case " + std::to_string(i);
        r.check(galois_twist(pb, tw.pi()) == pb, c + ": pi-fixed");
        r.check(has_coefficients_in_L(tw, pb), c + ": coefficients in L");
        r.check(pseudobound(pb, tw.pi(), tw.s()) == pb, c + ": idempotent");
        r.check(right_divides(f, pb), c + ": f right-divides its pseudobound");
        r.check(pb.degree() <= static_cast<int>(tw.s()) * f.degree(), c + ": degree at most s deg f");
        const auto g = random_poly(tw.theta(), rand_deg(rng, 2), rng) * f;
        r.check(right_divides(pb, pseudobound(g, tw.pi(), tw.s())), c + ": monotone under left multiples");
    }
    return r;
}

Result phi_isomorphism(int cases) {
    Result r{"permutation isomorphism and coordinates"};
    Rng rng(707);
    const auto b = bch16();
    const RsContext ctx = rs_context(b.code);
    const FrobeniusMap& th = b.tower->theta();
    const int n = ctx.n;
    const auto xn = SkewPolynomial::x_pow_minus_one(th, n);
    const auto yn = SkewPolynomial::x_pow_minus_one(ctx.rho, n);
    auto pad = [&](const SkewPolynomial& f) {
        auto c = f.coeffs();
        c.resize(n, f.field().zero());
        return c;
    };
    for (int i = 0; i < cases; ++i) {
        const auto f = random_poly(th, rand_deg(rng, n - 1), rng);
        const auto g = random_poly(th, rand_deg(rng, n - 1), rng);
        const auto fg = right_divmod(f * g, xn).remainder;
        const auto lhs = phi_map(fg, ctx.t, n);
        const auto rhs = right_divmod(phi_map(f, ctx.t, n) * phi_map(g, ctx.t, n), yn).remainder;
        const auto c = "case " + std::to_string(i);
        r.check(lhs == rhs, c + ": phi(fg) = phi(f) phi(g)");
        r.check(pad(phi_map(f, ctx.t, n)) == permute(pad(f), ctx.t), c + ": coordinates permute by rho");
        r.check(phi_inverse(phi_map(f, ctx.t, n), th, ctx.t, n) == f, c + ": phi inverse");
    }
    for (int i = 0; i < n; ++i) {
        const auto xi = SkewPolynomial::monomial(th, b.tower->M().one(), i);
        r.check(phi_map(xi, ctx.t, n) == SkewPolynomial::monomial(ctx.rho, b.tower->M().one(), (i * ctx.u) % n),
                "monomial x^" + std::to_string(i));
    }
    return r;
}

Result root_correspondence() {
    Result r{"operator roots versus right roots (exhaustive)"};
    Rng rng(808);
    for (unsigned m : {6u, 8u}) {
        auto M = conway_field(2, m);
        for (unsigned e : {1u, m == 6 ? 2u : 3u}) {
            const FrobeniusMap th(*M, e);
            for (int i = 0; i < 20; ++i) {
                // products of linear factors give many roots; random tails give few
                SkewPolynomial f = SkewPolynomial::one(th);
                for (int k = 0; k < 1 + i % 3; ++k) {
                    const auto a = random_nonzero(*M, rng);
                    f = SkewPolynomial::linear(th, a.inv() * th(a)) * f;
                }
                if (i % 2) f = random_poly(th, 1 + rand_deg(rng, 2), rng) * f;
                const LinearizedPoly F = linearize(f);
                int agree = 0;
                for (Code c = 1; c < M->order(); ++c) {
                    const auto a = M->element(c);
                    agree += F(a).is_zero() == right_eval(f, a.inv() * th(a)).is_zero();
                }
                r.check(agree == static_cast<int>(M->order()) - 1,
                        "GF(2^" + std::to_string(m) + ") f #" + std::to_string(i));
            }
        }
    }
    return r;
}

Result root_space_dimension() {
    Result r{"root space dimension of defining-set divisors"};
    auto M = conway_field(2, 8);
    const FrobeniusMap th(*M, 1);
    const auto alpha = normal_element_search(th);
    const auto beta = alpha.inv() * th(alpha);
    for (unsigned mask = 1; mask < 256; ++mask) {
        std::vector<FieldElement> roots, alphas;
        for (int i = 0; i < 8; ++i)
            if (mask >> i & 1) {
                roots.push_back(th.apply(beta, i));
                alphas.push_back(th.apply(alpha, i));
            }
        const auto g = lclm_linear(th, roots);
        const LinearizedPoly G = linearize(g);
        const auto Z = root_space(G);
        bool in_kernel = true;
        for (const auto& a : alphas) in_kernel &= G(a).is_zero();
        const auto m = "T mask " + std::to_string(mask);
        r.check(g.degree() == static_cast<int>(roots.size()), m + ": deg g = |T|");
        r.check(Z.size() == roots.size(), m + ": dim Z(Phi(g)) = deg g");
        r.check(in_kernel && gfp_rank(alphas) == alphas.size(), m + ": orbit elements form a basis of Z");
        r.check(right_divides(g, SkewPolynomial::x_pow_minus_one(th, 8)), m + ": g divides x^8 - 1");
    }
    return r;
}

std::vector<std::function<Result()>> all() {
    return {[] { return degree_laws(); },      [] { return bezout_laws(); },      [] { return lclm_laws(); },
            [] { return circulant(); },        [] { return rank_lower_bound(); }, [] { return pseudobound_laws(); },
            [] { return phi_isomorphism(); },  [] { return root_correspondence(); },
            [] { return root_space_dimension(); }};
}

}  // namespace props
