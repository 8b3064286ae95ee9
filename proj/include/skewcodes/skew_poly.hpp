#pragma once

// Skew polynomials over a finite field with x*a = theta(a)*x.

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewcodes/field.hpp"

namespace skewcodes {

class Tower;

class SkewPolynomial {
  public:
    SkewPolynomial() = default;
    explicit SkewPolynomial(FrobeniusMap twist) : twist_(twist) {}
    /// Ascending coefficients; trailing zeros are dropped.
    SkewPolynomial(FrobeniusMap twist, std::vector<FieldElement> coeffs);
    static SkewPolynomial from_codes(FrobeniusMap twist, std::vector<Code> coeffs);

    static SkewPolynomial zero(const FrobeniusMap& twist) { return SkewPolynomial(twist); }
    static SkewPolynomial one(const FrobeniusMap& twist);
    static SkewPolynomial constant(const FrobeniusMap& twist, const FieldElement& c);
    static SkewPolynomial monomial(const FrobeniusMap& twist, const FieldElement& c, std::size_t degree);
    /// x - gamma.
    static SkewPolynomial linear(const FrobeniusMap& twist, const FieldElement& gamma);
    /// x^n - 1.
    static SkewPolynomial x_pow_minus_one(const FrobeniusMap& twist, std::size_t n);

    const FrobeniusMap& twist() const { return twist_; }
    const Field& field() const { return twist_.field(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    FieldElement coeff(std::size_t i) const;
    FieldElement lead() const;
    std::vector<FieldElement> coeffs() const;
    const std::vector<Code>& codes() const { return c_; }

    SkewPolynomial operator+(const SkewPolynomial& o) const;
    SkewPolynomial operator-(const SkewPolynomial& o) const;
    SkewPolynomial operator-() const;
    SkewPolynomial operator*(const SkewPolynomial& o) const;
    /// Left scalar multiple c*f.
    friend SkewPolynomial operator*(const FieldElement& c, const SkewPolynomial& f);

    bool operator==(const SkewPolynomial& o) const { return twist_ == o.twist_ && c_ == o.c_; }
    bool operator!=(const SkewPolynomial& o) const { return !(*this == o); }

    /// lead^{-1} * f.
    SkewPolynomial monic() const;

    std::string to_string(Notation notation = Notation::power, std::string_view var = "x") const;

  private:
    void trim();
    void same_ring(const SkewPolynomial& o) const;

    FrobeniusMap twist_;
    std::vector<Code> c_;
};

struct DivMod {
    SkewPolynomial quotient;
    SkewPolynomial remainder;
};

/// f = q*g + r with deg r < deg g.
DivMod right_divmod(const SkewPolynomial& f, const SkewPolynomial& g);
/// f = g*q + r with deg r < deg g.
DivMod left_divmod(const SkewPolynomial& f, const SkewPolynomial& g);
bool right_divides(const SkewPolynomial& g, const SkewPolynomial& f);

struct Bezout {
    SkewPolynomial gcrd;  // monic
    SkewPolynomial u, v;  // u*f + v*g = gcrd
};

Bezout extended_gcrd(const SkewPolynomial& f, const SkewPolynomial& g);
SkewPolynomial gcrd(const SkewPolynomial& f, const SkewPolynomial& g);
SkewPolynomial lclm(const SkewPolynomial& f, const SkewPolynomial& g);
/// Left fold of the two-argument lclm.
SkewPolynomial lclm(std::span<const SkewPolynomial> fs);
/// lclm of x - gamma over the given roots.
SkewPolynomial lclm_linear(const FrobeniusMap& twist, std::span<const FieldElement> roots);

/// gamma * theta(gamma) * ... * theta^{i-1}(gamma).
FieldElement norm(const FieldElement& gamma, const FrobeniusMap& theta, std::size_t i);
/// N_0(gamma) .. N_n(gamma).
std::vector<FieldElement> norm_table(const FieldElement& gamma, const FrobeniusMap& theta, std::size_t n);
/// Remainder of the right division of f by x - gamma.
FieldElement right_eval(const SkewPolynomial& f, const FieldElement& gamma);
/// Coefficient-wise rho.
SkewPolynomial galois_twist(const SkewPolynomial& f, const FrobeniusMap& rho);
/// lclm(f, f^pi, ..., f^{pi^{s-1}}), the monic generator of Sf cap R.
SkewPolynomial pseudobound(const SkewPolynomial& f, const FrobeniusMap& pi, unsigned s);

/// Maps an L[x;sigma] polynomial into M[x;theta] through eps.
SkewPolynomial lift(const Tower& tower, const SkewPolynomial& f);
/// Inverse of lift; throws when a coefficient is outside eps(L).
SkewPolynomial descend(const Tower& tower, const SkewPolynomial& f);
bool has_coefficients_in_L(const Tower& tower, const SkewPolynomial& f);

/// Parses text like "x^12 + b^48x^11 + (b^3+b^2)x + 1". Juxtaposition or '*'
/// multiplies; both x and y name the variable; exponents may be braced.
SkewPolynomial parse_skew_polynomial(const FrobeniusMap& twist, std::string_view text);

}  // namespace skewcodes
