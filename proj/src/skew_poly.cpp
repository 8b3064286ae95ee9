#include "skewcodes/skew_poly.hpp"

#include <cctype>

#include "skewcodes/tower.hpp"

namespace skewcodes {

SkewPolynomial::SkewPolynomial(FrobeniusMap twist, std::vector<FieldElement> coeffs) : twist_(twist) {
    c_.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (c.field_ptr() != twist_.field_ptr()) throw ValidationError("coefficient field mismatch");
        c_.push_back(c.code());
    }
    trim();
}

SkewPolynomial SkewPolynomial::from_codes(FrobeniusMap twist, std::vector<Code> coeffs) {
    SkewPolynomial f(twist);
    f.c_ = std::move(coeffs);
    f.trim();
    return f;
}

SkewPolynomial SkewPolynomial::one(const FrobeniusMap& twist) { return from_codes(twist, {1}); }

SkewPolynomial SkewPolynomial::constant(const FrobeniusMap& twist, const FieldElement& c) {
    return SkewPolynomial(twist, {c});
}

SkewPolynomial SkewPolynomial::monomial(const FrobeniusMap& twist, const FieldElement& c, std::size_t degree) {
    std::vector<FieldElement> v(degree + 1, twist.field().zero());
    v[degree] = c;
    return SkewPolynomial(twist, std::move(v));
}

SkewPolynomial SkewPolynomial::linear(const FrobeniusMap& twist, const FieldElement& gamma) {
    return SkewPolynomial(twist, {-gamma, twist.field().one()});
}

SkewPolynomial SkewPolynomial::x_pow_minus_one(const FrobeniusMap& twist, std::size_t n) {
    const Field& f = twist.field();
    std::vector<Code> v(n + 1, 0);
    v[0] = f.neg(1);
    v[n] = f.add(v[n], 1);
    return from_codes(twist, std::move(v));
}

void SkewPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void SkewPolynomial::same_ring(const SkewPolynomial& o) const {
    if (twist_ != o.twist_) throw ValidationError("skew polynomials live in different rings");
}

FieldElement SkewPolynomial::coeff(std::size_t i) const {
    return {twist_.field_ptr(), i < c_.size() ? c_[i] : 0};
}

FieldElement SkewPolynomial::lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return {twist_.field_ptr(), c_.back()};
}

std::vector<FieldElement> SkewPolynomial::coeffs() const {
    std::vector<FieldElement> out;
    for (Code c : c_) out.emplace_back(twist_.field_ptr(), c);
    return out;
}

SkewPolynomial SkewPolynomial::operator+(const SkewPolynomial& o) const {
    same_ring(o);
    const Field& f = field();
    std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return from_codes(twist_, std::move(r));
}

SkewPolynomial SkewPolynomial::operator-() const {
    std::vector<Code> r(c_);
    for (auto& c : r) c = field().neg(c);
    return from_codes(twist_, std::move(r));
}

SkewPolynomial SkewPolynomial::operator-(const SkewPolynomial& o) const { return *this + (-o); }

SkewPolynomial SkewPolynomial::operator*(const SkewPolynomial& o) const {
    same_ring(o);
    if (c_.empty() || o.c_.empty()) return zero(twist_);
    const Field& f = field();
    const unsigned e = twist_.exponent();
    std::vector<Code> r(c_.size() + o.c_.size() - 1, 0);
    std::vector<Code> tw(o.c_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0)
            for (auto& g : tw) g = f.frob(g, e);
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < tw.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(c_[i], tw[j]));
    }
    return from_codes(twist_, std::move(r));
}

SkewPolynomial operator*(const FieldElement& c, const SkewPolynomial& g) {
    if (c.field_ptr() != g.twist().field_ptr()) throw ValidationError("scalar field mismatch");
    std::vector<Code> r(g.codes());
    for (auto& v : r) v = c.field().mul(c.code(), v);
    return SkewPolynomial::from_codes(g.twist(), std::move(r));
}

SkewPolynomial SkewPolynomial::monic() const {
    if (c_.empty()) return *this;
    return lead().inv() * *this;
}

std::string SkewPolynomial::to_string(Notation notation, std::string_view var) const {
    if (c_.empty()) return "0";
    const Field& f = field();
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const std::string c = f.format({&f, c_[i]}, notation);
        if (i == 0) {
            out += c;
            continue;
        }
        if (c_[i] != 1) out += c;
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

DivMod right_divmod(const SkewPolynomial& f, const SkewPolynomial& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (f.twist() != g.twist()) throw ValidationError("skew polynomials live in different rings");
    const FrobeniusMap& th = f.twist();
    const Field& F = f.field();
    std::vector<Code> r(f.codes());
    const int dg = g.degree();
    std::vector<Code> q(f.degree() >= dg ? f.degree() - dg + 1 : 0, 0);
    const auto& gc = g.codes();
    while (static_cast<int>(r.size()) - 1 >= dg && !r.empty()) {
        const int d = static_cast<int>(r.size()) - 1 - dg;
        // c x^d g has leading coefficient c * theta^d(g_lead).
        const Code c = F.mul(r.back(), F.inv(th.apply({&F, gc.back()}, d).code()));
        q[d] = c;
        for (int j = 0; j <= dg; ++j)
            r[d + j] = F.sub(r[d + j], F.mul(c, th.apply({&F, gc[j]}, d).code()));
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {SkewPolynomial::from_codes(th, std::move(q)), SkewPolynomial::from_codes(th, std::move(r))};
}

DivMod left_divmod(const SkewPolynomial& f, const SkewPolynomial& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (f.twist() != g.twist()) throw ValidationError("skew polynomials live in different rings");
    const FrobeniusMap& th = f.twist();
    const Field& F = f.field();
    const int dg = g.degree();
    const Code ginv = F.inv(g.codes().back());
    SkewPolynomial r = f;
    std::vector<Code> q(f.degree() >= dg ? f.degree() - dg + 1 : 0, 0);
    while (r.degree() >= dg) {
        const int d = r.degree() - dg;
        // g * c x^d has leading coefficient g_lead * theta^dg(c).
        const FieldElement c = th.apply({&F, F.mul(ginv, r.codes().back())}, -dg);
        q[d] = c.code();
        r = r - g * SkewPolynomial::monomial(th, c, d);
    }
    return {SkewPolynomial::from_codes(th, std::move(q)), r};
}

bool right_divides(const SkewPolynomial& g, const SkewPolynomial& f) { return right_divmod(f, g).remainder.is_zero(); }

namespace {

struct EuclidState {
    Bezout bezout;
    SkewPolynomial lclm;
};

EuclidState run_euclid(const SkewPolynomial& f, const SkewPolynomial& g) {
    if (f.twist() != g.twist()) throw ValidationError("skew polynomials live in different rings");
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcrd of two zero polynomials");
    const auto& tw = f.twist();
    SkewPolynomial r0 = f, r1 = g;
    SkewPolynomial u0 = SkewPolynomial::one(tw), u1 = SkewPolynomial::zero(tw);
    SkewPolynomial v0 = SkewPolynomial::zero(tw), v1 = SkewPolynomial::one(tw);
    while (!r1.is_zero()) {
        auto [q, r] = right_divmod(r0, r1);
        SkewPolynomial u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    const FieldElement c = r0.lead().inv();
    return {{c * r0, c * u0, c * v0}, (u1 * f).monic()};
}

}  // namespace

Bezout extended_gcrd(const SkewPolynomial& f, const SkewPolynomial& g) { return run_euclid(f, g).bezout; }

SkewPolynomial gcrd(const SkewPolynomial& f, const SkewPolynomial& g) { return run_euclid(f, g).bezout.gcrd; }

SkewPolynomial lclm(const SkewPolynomial& f, const SkewPolynomial& g) {
    if (f.is_zero() || g.is_zero()) {
        if (f.twist() != g.twist()) throw ValidationError("skew polynomials live in different rings");
        return SkewPolynomial::zero(f.twist());
    }
    return run_euclid(f, g).lclm;
}

SkewPolynomial lclm(std::span<const SkewPolynomial> fs) {
    if (fs.empty()) throw ValidationError("lclm of an empty family");
    SkewPolynomial acc = fs.front().monic();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = lclm(acc, fs[i]);
    return acc;
}

SkewPolynomial lclm_linear(const FrobeniusMap& twist, std::span<const FieldElement> roots) {
    if (roots.empty()) throw ValidationError("lclm of an empty family");
    SkewPolynomial acc = SkewPolynomial::linear(twist, roots.front());
    for (std::size_t i = 1; i < roots.size(); ++i) {
        // Skip roots already annihilated; keeps the fold cheap.
        if (right_eval(acc, roots[i]).is_zero()) continue;
        acc = lclm(acc, SkewPolynomial::linear(twist, roots[i]));
    }
    return acc;
}

FieldElement norm(const FieldElement& gamma, const FrobeniusMap& theta, std::size_t i) {
    FieldElement acc = gamma.field().one(), t = gamma;
    for (std::size_t j = 0; j < i; ++j, t = theta(t)) acc *= t;
    return acc;
}

std::vector<FieldElement> norm_table(const FieldElement& gamma, const FrobeniusMap& theta, std::size_t n) {
    std::vector<FieldElement> out{gamma.field().one()};
    FieldElement t = gamma;
    for (std::size_t j = 0; j < n; ++j, t = theta(t)) out.push_back(out.back() * t);
    return out;
}

FieldElement right_eval(const SkewPolynomial& f, const FieldElement& gamma) {
    if (gamma.field_ptr() != f.twist().field_ptr()) throw ValidationError("field mismatch");
    const Field& F = f.field();
    const unsigned e = f.twist().exponent();
    Code acc = 0, N = 1, t = gamma.code();
    for (Code c : f.codes()) {
        acc = F.add(acc, F.mul(c, N));
        N = F.mul(N, t);
        t = F.frob(t, e);
    }
    return {&F, acc};
}

SkewPolynomial galois_twist(const SkewPolynomial& f, const FrobeniusMap& rho) {
    if (rho.field_ptr() != f.twist().field_ptr()) throw ValidationError("field mismatch");
    std::vector<Code> r(f.codes());
    for (auto& c : r) c = f.field().frob(c, rho.exponent());
    return SkewPolynomial::from_codes(f.twist(), std::move(r));
}

SkewPolynomial pseudobound(const SkewPolynomial& f, const FrobeniusMap& pi, unsigned s) {
    SkewPolynomial acc = f.monic(), fj = f;
    for (unsigned j = 1; j < s; ++j) {
        fj = galois_twist(fj, pi);
        acc = lclm(acc, fj);
    }
    return acc;
}

SkewPolynomial lift(const Tower& tower, const SkewPolynomial& f) {
    if (f.twist() != tower.sigma()) throw ValidationError("lift expects a polynomial in L[x;sigma]");
    std::vector<FieldElement> c;
    for (const auto& a : f.coeffs()) c.push_back(tower.embed(a));
    return SkewPolynomial(tower.theta(), std::move(c));
}

SkewPolynomial descend(const Tower& tower, const SkewPolynomial& f) {
    if (f.twist() != tower.theta()) throw ValidationError("descend expects a polynomial in M[x;theta]");
    std::vector<FieldElement> c;
    for (const auto& a : f.coeffs()) {
        auto b = tower.pull_back(a);
        if (!b) throw ValidationError("coefficient outside eps(L)");
        c.push_back(*b);
    }
    return SkewPolynomial(tower.sigma(), std::move(c));
}

bool has_coefficients_in_L(const Tower& tower, const SkewPolynomial& f) {
    for (const auto& a : f.coeffs())
        if (!tower.in_image(a)) return false;
    return true;
}

namespace {

class PolyParser {
  public:
    PolyParser(const FrobeniusMap& tw, std::string_view s) : tw_(tw), f_(tw.field()), s_(s) {
        const auto& g = f_.generator_name();
        if (g.empty() || g == "x" || g == "y") throw ValidationError("generator name clashes with the variable");
    }

    SkewPolynomial parse() {
        SkewPolynomial r = expr();
        ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ValidationError("polynomial parse error at " + std::to_string(pos_) + ": " + what + " in '" +
                              std::string(s_) + "'");
    }
    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        ws();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == '(' || c == '[' || std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' ||
               s_.substr(pos_, f_.generator_name().size()) == f_.generator_name();
    }

    SkewPolynomial expr() {
        bool negate = false;
        if (peek('-')) {
            ++pos_;
            negate = true;
        } else if (peek('+')) {
            ++pos_;
        }
        SkewPolynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    SkewPolynomial term() {
        SkewPolynomial acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    std::int64_t exponent() {
        if (!peek('^')) return 1;
        ++pos_;
        ws();
        const bool braced = peek('{');
        if (braced) ++pos_;
        ws();
        bool neg = false;
        if (peek('-')) {
            ++pos_;
            neg = true;
        }
        ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        std::int64_t v = std::stoll(std::string(s_.substr(start, pos_ - start)));
        if (braced) {
            if (!peek('}')) fail("expected '}'");
            ++pos_;
        }
        return neg ? -v : v;
    }

    SkewPolynomial factor() {
        ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SkewPolynomial r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == '[') {
            const std::size_t end = s_.find(']', pos_);
            if (end == std::string_view::npos) fail("unterminated '['");
            const FieldElement v = f_.parse(s_.substr(pos_, end - pos_ + 1));
            pos_ = end + 1;
            return SkewPolynomial::constant(tw_, v);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return SkewPolynomial::constant(tw_, f_.from_int(std::stoll(std::string(s_.substr(start, pos_ - start)))));
        }
        const auto& g = f_.generator_name();
        if (s_.substr(pos_, g.size()) == g) {
            pos_ += g.size();
            return SkewPolynomial::constant(tw_, f_.gen_pow(exponent()));
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            const std::int64_t e = exponent();
            if (e < 0) fail("negative power of the variable");
            return SkewPolynomial::monomial(tw_, f_.one(), static_cast<std::size_t>(e));
        }
        fail("unexpected character");
    }

    const FrobeniusMap& tw_;
    const Field& f_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

SkewPolynomial parse_skew_polynomial(const FrobeniusMap& twist, std::string_view text) {
    return PolyParser(twist, text).parse();
}

}  // namespace skewcodes
