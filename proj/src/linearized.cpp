#include "skewcodes/linearized.hpp"

namespace skewcodes {

LinearizedPoly::LinearizedPoly(FrobeniusMap twist, std::vector<Code> coeffs) : twist_(twist), c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElement LinearizedPoly::coeff(std::size_t i) const { return {twist_.field_ptr(), i < c_.size() ? c_[i] : 0}; }

FieldElement LinearizedPoly::operator()(const FieldElement& gamma) const {
    if (gamma.field_ptr() != twist_.field_ptr()) throw ValidationError("field mismatch");
    const Field& F = field();
    Code acc = 0, t = gamma.code();
    for (Code c : c_) {
        acc = F.add(acc, F.mul(c, t));
        t = F.frob(t, twist_.exponent());
    }
    return {&F, acc};
}

LinearizedPoly linearize(const SkewPolynomial& f) { return {f.twist(), f.codes()}; }

SkewPolynomial delinearize(const LinearizedPoly& F) { return SkewPolynomial::from_codes(F.twist(), F.codes()); }

FieldElement op_eval(const LinearizedPoly& F, const FieldElement& gamma) { return F(gamma); }

LinearizedPoly compose(const LinearizedPoly& F, const LinearizedPoly& G) {
    if (F.twist() != G.twist()) throw ValidationError("operators with different twists");
    const Field& M = F.field();
    const unsigned e = F.twist().exponent();
    if (F.codes().empty() || G.codes().empty()) return {F.twist(), {}};
    std::vector<Code> out(F.codes().size() + G.codes().size() - 1, 0);
    // F_i theta^i o G_j theta^j = F_i theta^i(G_j) theta^{i+j}.
    for (std::size_t i = 0; i < F.codes().size(); ++i)
        for (std::size_t j = 0; j < G.codes().size(); ++j)
            out[i + j] = M.add(out[i + j], M.mul(F.codes()[i], M.frob(G.codes()[j], static_cast<unsigned>((e * i) % M.degree()))));
    return {F.twist(), std::move(out)};
}

namespace {

std::vector<gfp::Vec> kernel_gfp(const LinearizedPoly& F) {
    const Field& M = F.field();
    const unsigned m = M.degree();
    std::vector<gfp::Vec> rows(m, gfp::Vec(m, 0));
    for (unsigned c = 0; c < m; ++c) {
        std::vector<unsigned> e(m, 0);
        e[c] = 1;
        const auto img = to_vec(F(M.from_coords(e)));
        for (unsigned r = 0; r < m; ++r) rows[r][c] = img[r];
    }
    return gfp::kernel(rows, m, M.characteristic());
}

}  // namespace

std::size_t root_space_gfp_dimension(const LinearizedPoly& F) { return kernel_gfp(F).size(); }

std::vector<FieldElement> root_space(const LinearizedPoly& F) {
    const Field& M = F.field();
    const auto kbasis = fixed_field_basis(F.twist());
    std::vector<FieldElement> out, span;
    for (const auto& v : kernel_gfp(F)) {
        const FieldElement x = M.from_coords(v);
        std::vector<FieldElement> trial = span;
        trial.push_back(x);
        if (gfp_rank(trial) == span.size()) continue;
        out.push_back(x);
        for (const auto& kappa : kbasis) span.push_back(kappa * x);
    }
    return out;
}

LinearizedPoly minimal_linearized(const Tower& tower, const FieldElement& gamma) {
    if (gamma.field_ptr() != &tower.M()) throw ValidationError("gamma must lie in M");
    if (gamma.is_zero()) throw ValidationError("minimal polynomial of zero");
    const FrobeniusMap& th = tower.theta();
    const FieldElement beta = gamma.inv() * th(gamma);
    const SkewPolynomial pb = pseudobound(SkewPolynomial::linear(th, beta), tower.pi(), tower.s());
    const LinearizedPoly out = linearize(pb);
    if (!out(gamma).is_zero()) throw std::logic_error("internal invariant violated: minimal polynomial kills gamma");
    if (!has_coefficients_in_L(tower, pb)) throw std::logic_error("internal invariant violated: coefficients in L");
    return out;
}

std::size_t orbit_rank_over_L(const Tower& tower, const FieldElement& gamma) {
    const Field& L = tower.L();
    std::vector<FieldElement> lbasis;
    for (unsigned j = 0; j < L.degree(); ++j) {
        std::vector<unsigned> e(L.degree(), 0);
        e[j] = 1;
        lbasis.push_back(tower.embed(L.from_coords(e)));
    }
    std::vector<FieldElement> span;
    FieldElement t = gamma;
    for (unsigned i = 0; i < tower.n(); ++i, t = tower.theta()(t))
        for (const auto& l : lbasis) span.push_back(l * t);
    return gfp_rank(span) / L.degree();
}

}  // namespace skewcodes
