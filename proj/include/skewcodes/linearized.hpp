#pragma once

// Linearized polynomials as operators sum_i F_i theta^i on M.

#include <vector>

#include "skewcodes/skew_poly.hpp"
#include "skewcodes/tower.hpp"

namespace skewcodes {

class LinearizedPoly {
  public:
    LinearizedPoly() = default;
    LinearizedPoly(FrobeniusMap twist, std::vector<Code> coeffs);

    const FrobeniusMap& twist() const { return twist_; }
    const Field& field() const { return twist_.field(); }
    /// Operator degree; -1 for the zero operator.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Code>& codes() const { return c_; }
    FieldElement coeff(std::size_t i) const;

    /// sum_i F_i theta^i(gamma).
    FieldElement operator()(const FieldElement& gamma) const;

    bool operator==(const LinearizedPoly& o) const { return twist_ == o.twist_ && c_ == o.c_; }

  private:
    FrobeniusMap twist_;
    std::vector<Code> c_;
};

LinearizedPoly linearize(const SkewPolynomial& f);
SkewPolynomial delinearize(const LinearizedPoly& F);
FieldElement op_eval(const LinearizedPoly& F, const FieldElement& gamma);
/// (F o G)(gamma) = F(G(gamma)).
LinearizedPoly compose(const LinearizedPoly& F, const LinearizedPoly& G);

/// Kernel of F as a subspace over K = fixed field of the twist, given as a
/// K-basis chosen greedily from the reduced GF(p) kernel basis.
std::vector<FieldElement> root_space(const LinearizedPoly& F);
/// Dimension of the kernel of F over GF(p).
std::size_t root_space_gfp_dimension(const LinearizedPoly& F);

/// Phi(pseudobound(x - gamma^{-1} theta(gamma))): the monic operator of least
/// degree with coefficients in eps(L) annihilating gamma.
LinearizedPoly minimal_linearized(const Tower& tower, const FieldElement& gamma);
/// Dimension over L of span{theta^i(gamma)}, computed by GF(p) linear algebra.
std::size_t orbit_rank_over_L(const Tower& tower, const FieldElement& gamma);

}  // namespace skewcodes
