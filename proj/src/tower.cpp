#include "skewcodes/tower.hpp"

#include <algorithm>
#include <numeric>

namespace skewcodes {

namespace {

constexpr std::uint64_t kInverseTableLimit = std::uint64_t{1} << 16;

unsigned log_p(std::uint64_t q, unsigned p) {
    unsigned d = 0;
    while (q > 1 && q % p == 0) {
        q /= p;
        ++d;
    }
    if (q != 1) throw ValidationError("q is not a power of the characteristic");
    return d;
}

FieldElement eval_int_poly(const Field& M, const std::vector<unsigned>& f, const FieldElement& x) {
    FieldElement acc = M.zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + M.from_int(f[i]);
    return acc;
}

// Image of an L element under b -> r.
FieldElement embed_with(const Field& L, const Field& M, const FieldElement& r, const FieldElement& x) {
    const auto d = L.unpack(x.code());
    FieldElement acc = M.zero(), rp = M.one();
    for (unsigned c : d) {
        if (c) acc += M.from_int(c) * rp;
        rp *= r;
    }
    return acc;
}

bool compatible(const Field& L, const Field& M, const FrobeniusMap& sigma, const FrobeniusMap& theta,
                const FieldElement& r) {
    return theta(r) == embed_with(L, M, r, sigma(L.generator()));
}

}  // namespace

AutomorphismExtension extend_automorphism(std::uint64_t q, unsigned mu, unsigned h, unsigned s,
                                          std::optional<unsigned> k) {
    if (q < 2) throw ValidationError("q must be at least 2");
    if (mu < 1 || s < 1) throw ValidationError("mu and s must be positive");
    if (std::gcd(h, mu) != 1) throw ValidationError("gcd(h, mu) must be 1");
    AutomorphismExtension ext{q, mu, s, mu * s, h, 0};
    const unsigned n = ext.n;
    if (k) {
        if (std::gcd(*k, n) != 1) throw ValidationError("gcd(k, n) must be 1");
        if ((*k % mu) != (h % mu)) throw ValidationError("k must be congruent to h mod mu");
        ext.k = *k % n;
        return ext;
    }
    unsigned a = 1;
    for (std::uint64_t r : prime_factors(s))
        if (h % r != 0) a *= static_cast<unsigned>(r);
    ext.k = static_cast<unsigned>((static_cast<std::uint64_t>(a) * mu + h) % n);
    if (std::gcd(ext.k, n) != 1) throw ValidationError("extension k is not coprime to n");
    return ext;
}

FieldElement primitive_element(const Field& f) {
    const std::uint64_t q1 = f.order() - 1;
    const auto primes = prime_factors(q1);
    auto primitive = [&](Code c) {
        if (c == 0) return false;
        for (auto r : primes)
            if (f.pow(c, q1 / r) == 1) return false;
        return true;
    };
    if (primitive(f.generator().code())) return f.generator();
    for (Code c = 1; c < f.order(); ++c)
        if (primitive(c)) return f.element(c);
    throw std::logic_error("no primitive element");
}

std::vector<FieldElement> embedding_candidates(const Field& L, const Field& M, const FrobeniusMap& sigma,
                                               const FrobeniusMap& theta) {
    if (L.characteristic() != M.characteristic()) throw ValidationError("L and M have different characteristic");
    if (M.degree() % L.degree() != 0) throw ValidationError("deg L must divide deg M");
    const auto& f = L.spec().modulus;
    const unsigned mL = L.degree();
    std::vector<FieldElement> roots;
    if (mL == 1) {
        roots.push_back(M.from_int(-static_cast<std::int64_t>(f[0])));
    } else if (L.spec().modulus == M.spec().modulus) {
        roots.push_back(M.generator());
    } else {
        const FieldElement w = primitive_element(M);
        const FieldElement z = w.pow(static_cast<std::int64_t>((M.order() - 1) / (L.order() - 1)));
        FieldElement zj = z;
        for (std::uint64_t j = 1; j < L.order() - 1; ++j, zj *= z) {
            if (eval_int_poly(M, f, zj).is_zero()) {
                roots.push_back(zj);
                break;
            }
        }
    }
    if (roots.empty()) throw ValidationError("L's modulus has no root in M");
    const FieldElement r0 = roots.front();
    for (unsigned i = 1; i < mL; ++i) roots.push_back(FrobeniusMap(M, i)(r0));
    std::vector<FieldElement> out;
    for (const auto& r : roots)
        if (compatible(L, M, sigma, theta, r)) out.push_back(r);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.code() < b.code(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FieldElement find_embedding(const Field& L, const Field& M, const FrobeniusMap& sigma, const FrobeniusMap& theta) {
    auto c = embedding_candidates(L, M, sigma, theta);
    if (c.empty()) throw ValidationError("no root of L's modulus is compatible with sigma and theta");
    return c.front();
}

bool is_normal(const FieldElement& alpha, const FrobeniusMap& phi) {
    if (alpha.is_zero()) return false;
    const Field& f = phi.field();
    const auto kbasis = fixed_field_basis(phi);
    const unsigned n = phi.order();
    std::vector<FieldElement> span;
    FieldElement a = alpha;
    for (unsigned i = 0; i < n; ++i, a = phi(a))
        for (const auto& kappa : kbasis) span.push_back(kappa * a);
    return gfp_rank(span) == f.degree();
}

FieldElement normal_element_search(const FrobeniusMap& phi, std::uint64_t seed,
                                   std::optional<FieldElement> preferred) {
    const Field& f = phi.field();
    if (preferred && is_normal(*preferred, phi)) return *preferred;
    const std::uint64_t start = seed % f.order();
    for (std::uint64_t i = 0; i < f.order(); ++i) {
        const FieldElement c = f.element((start + i) % f.order());
        if (is_normal(c, phi)) return c;
    }
    throw std::logic_error("no normal element found");
}

std::shared_ptr<const Tower> Tower::make(std::shared_ptr<const Field> L, std::shared_ptr<const Field> M,
                                         const AutomorphismExtension& ext, std::optional<FieldElement> eps_override) {
    if (!L || !M) throw ValidationError("missing field");
    const unsigned p = L->characteristic();
    if (M->characteristic() != p) throw ValidationError("L and M have different characteristic");
    const unsigned d = log_p(ext.q, p);
    if (L->degree() != d * ext.mu) throw ValidationError("deg L must equal mu * log_p(q)");
    if (M->degree() != d * ext.n) throw ValidationError("deg M must equal n * log_p(q)");
    if (ext.n != ext.mu * ext.s) throw ValidationError("n must equal mu * s");
    if (std::gcd(ext.k, ext.n) != 1 || ext.k % ext.mu != ext.h % ext.mu)
        throw ValidationError("theta does not extend sigma with order n");

    std::shared_ptr<Tower> t(new Tower());
    t->L_ = L;
    t->M_ = M;
    t->ext_ = ext;
    t->sigma_ = FrobeniusMap(*L, static_cast<std::int64_t>(ext.h) * d);
    t->theta_ = FrobeniusMap(*M, static_cast<std::int64_t>(ext.k) * d);
    t->pi_ = t->theta_.pow(ext.mu);
    if (t->theta_.order() != ext.n) throw ValidationError("theta must have order n");
    if (eps_override) {
        const FieldElement r = *eps_override;
        if (r.field_ptr() != M.get()) throw ValidationError("embedding override is not in M");
        if (!eval_int_poly(*M, L->spec().modulus, r).is_zero())
            throw ValidationError("embedding override is not a root of L's modulus");
        if (!compatible(*L, *M, t->sigma_, t->theta_, r))
            throw ValidationError("embedding override is not compatible with sigma and theta");
        t->eps_ = r;
    } else {
        t->eps_ = find_embedding(*L, *M, t->sigma_, t->theta_);
    }
    FieldElement rp = M->one();
    for (unsigned i = 0; i < L->degree(); ++i, rp *= t->eps_) t->basis_images_.push_back(rp.code());
    if (L->order() <= kInverseTableLimit)
        for (Code c = 0; c < L->order(); ++c) t->inverse_[t->embed(L->element(c)).code()] = c;
    return t;
}

FieldElement Tower::embed(const FieldElement& x) const {
    if (x.field_ptr() != L_.get()) throw ValidationError("embed expects an element of L");
    const unsigned p = L_->characteristic();
    Code c = x.code(), acc = 0;
    for (unsigned i = 0; i < L_->degree(); ++i) {
        const unsigned dgt = p == 2 ? static_cast<unsigned>((c >> i) & 1) : static_cast<unsigned>(c % p);
        if (p != 2) c /= p;
        if (dgt) acc = M_->add(acc, M_->scale(basis_images_[i], dgt));
    }
    return {M_.get(), acc};
}

std::optional<FieldElement> Tower::pull_back(const FieldElement& x) const {
    if (x.field_ptr() != M_.get()) throw ValidationError("pull_back expects an element of M");
    if (!inverse_.empty()) {
        auto it = inverse_.find(x.code());
        if (it == inverse_.end()) return std::nullopt;
        return FieldElement(L_.get(), it->second);
    }
    const unsigned p = L_->characteristic(), mL = L_->degree(), mM = M_->degree();
    std::vector<gfp::Vec> rows(mM, gfp::Vec(mL + 1, 0));
    for (unsigned j = 0; j < mL; ++j) {
        const auto col = M_->unpack(basis_images_[j]);
        for (unsigned i = 0; i < mM; ++i) rows[i][j] = col[i];
    }
    const auto rhs = M_->unpack(x.code());
    for (unsigned i = 0; i < mM; ++i) rows[i][mL] = rhs[i];
    const auto red = gfp::row_reduce(rows, p);
    std::vector<unsigned> coords(mL, 0);
    for (const auto& row : red) {
        unsigned c = 0;
        while (c <= mL && row[c] == 0) ++c;
        if (c == mL) return std::nullopt;
        coords[c] = row[mL];
    }
    return L_->from_coords(coords);
}

}  // namespace skewcodes
