#include "skewcodes/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace skewcodes {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

unsigned inv_mod_p(unsigned a, unsigned p) {
    unsigned r = 1;
    unsigned e = p - 2;
    unsigned b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Polynomials over GF(p), ascending, trimmed.
using Poly = std::vector<unsigned>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    trim(a);
    const unsigned lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const unsigned c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---- FieldElement ----------------------------------------------------------

const Field& FieldElement::field() const {
    if (!field_) throw std::logic_error("field element without a field");
    return *field_;
}

void FieldElement::same_field(const FieldElement& o) const {
    if (field_ != o.field_) throw ValidationError("field mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    same_field(o);
    return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    same_field(o);
    return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    same_field(o);
    return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    same_field(o);
    return {field_, field_->mul(code_, field_->inv(o.code_))};
}
FieldElement FieldElement::operator-() const { return {field_, field().neg(code_)}; }
FieldElement FieldElement::inv() const { return {field_, field().inv(code_)}; }

FieldElement FieldElement::pow(std::int64_t e) const {
    const Field& f = field();
    if (e < 0) return inv().pow(-e);
    return {field_, f.pow(code_, static_cast<std::uint64_t>(e))};
}

// ---- Field -----------------------------------------------------------------

Field::Field(const FieldSpec& spec) : spec_(spec), p_(spec.p) {
    m_ = static_cast<unsigned>(spec.modulus.size() - 1);
    pow_p_.assign(m_ + 1, 1);
    for (unsigned i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
    order_ = pow_p_[m_];
    if (p_ == 2)
        for (unsigned i = 0; i < m_; ++i)
            if (spec.modulus[i]) mod_bits_ |= std::uint64_t{1} << i;
    if (m_ == 1) {
        gen_code_ = (p_ - spec.modulus[0]) % p_;
    } else {
        gen_code_ = p_;
    }
}

std::shared_ptr<const Field> Field::make(const FieldSpec& spec) {
    if (spec.p > 65521 || !is_prime(spec.p)) throw ValidationError("characteristic must be a prime");
    if (spec.modulus.size() < 2) throw ValidationError("modulus must have degree >= 1");
    if (spec.modulus.back() != 1) throw ValidationError("modulus must be monic");
    for (unsigned c : spec.modulus)
        if (c >= spec.p) throw ValidationError("modulus coefficient out of range");
    const unsigned m = static_cast<unsigned>(spec.modulus.size() - 1);
    long double size = 1;
    for (unsigned i = 0; i < m; ++i) size *= spec.p;
    if (size > 4.0e18L || (spec.p == 2 && m > 62)) throw ValidationError("field too large");

    std::shared_ptr<Field> f(new Field(spec));
    // Irreducibility (Rabin): x^(p^m) = x mod f, and gcd(x^(p^(m/r)) - x, f) = 1
    // for every prime r | m. Arithmetic below is in GF(p)[x]/(f), valid for any f.
    if (m > 1) {
        const Code x = f->gen_code_;
        std::vector<Code> xpow(m + 1);
        xpow[0] = x;
        for (unsigned i = 1; i <= m; ++i) xpow[i] = f->pow_poly(xpow[i - 1], spec.p);
        if (xpow[m] != x) throw ValidationError("modulus is reducible");
        for (std::uint64_t r : prime_factors(m)) {
            Poly h = f->unpack(f->sub(xpow[m / r], x));
            Poly g = poly_gcd(spec.modulus, h, spec.p);
            if (g.size() != 1) throw ValidationError("modulus is reducible");
        }
    }
    f->build_tables();
    f->build_frobenius();
    return f;
}

std::vector<unsigned> Field::unpack(Code a) const {
    std::vector<unsigned> d(m_, 0);
    if (p_ == 2) {
        for (unsigned i = 0; i < m_; ++i) d[i] = (a >> i) & 1;
    } else {
        for (unsigned i = 0; i < m_; ++i) {
            d[i] = static_cast<unsigned>(a % p_);
            a /= p_;
        }
    }
    return d;
}

Code Field::pack(std::span<const unsigned> digits) const {
    Code c = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (i >= m_) {
            if (digits[i] % p_) throw ValidationError("coordinate vector too long");
            continue;
        }
        c = c * p_ + digits[i] % p_;
    }
    return c;
}

Code Field::add(Code a, Code b) const {
    if (p_ == 2) return a ^ b;
    Code r = 0;
    for (unsigned i = 0; i < m_; ++i) {
        const Code da = a % p_, db = b % p_;
        r += ((da + db) % p_) * pow_p_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Code Field::neg(Code a) const {
    if (p_ == 2) return a;
    Code r = 0;
    for (unsigned i = 0; i < m_; ++i) {
        const Code da = a % p_;
        r += ((p_ - da) % p_) * pow_p_[i];
        a /= p_;
    }
    return r;
}

Code Field::sub(Code a, Code b) const { return p_ == 2 ? a ^ b : add(a, neg(b)); }

Code Field::scale(Code a, unsigned digit) const {
    digit %= p_;
    if (digit == 0) return 0;
    if (digit == 1) return a;
    Code r = 0;
    for (unsigned i = 0; i < m_; ++i) {
        r += (a % p_ * digit % p_) * pow_p_[i];
        a /= p_;
    }
    return r;
}

Code Field::mul_poly(Code a, Code b) const {
    if (p_ == 2) {
        const std::uint64_t top = std::uint64_t{1} << m_;
        Code r = 0;
        for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
            r <<= 1;
            if (r & top) r ^= top | mod_bits_;
            if ((b >> i) & 1) r ^= a;
        }
        return r;
    }
    const auto da = unpack(a), db = unpack(b);
    std::vector<std::uint64_t> prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] += std::uint64_t{da[i]} * db[j];
    }
    for (auto& c : prod) c %= p_;
    const auto& f = spec_.modulus;
    for (std::size_t k = 2 * m_; k-- > m_;) {
        const std::uint64_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < m_; ++i)
            prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - c) * f[i]) % p_;
    }
    Code r = 0;
    for (unsigned i = m_; i-- > 0;) r = r * p_ + prod[i];
    return r;
}

Code Field::pow_poly(Code a, std::uint64_t e) const {
    Code r = 1;
    while (e) {
        if (e & 1) r = mul_poly(r, a);
        a = mul_poly(a, a);
        e >>= 1;
    }
    return r;
}

void Field::build_tables() {
    if (order_ > kTableLimit || order_ < 3) return;
    const std::uint64_t q1 = order_ - 1;
    for (std::uint64_t r : prime_factors(q1))
        if (pow_poly(gen_code_, q1 / r) == 1) return;
    exp_.resize(2 * q1);
    log_.assign(order_, 0);
    Code x = 1;
    for (std::uint64_t i = 0; i < q1; ++i) {
        exp_[i] = x;
        exp_[i + q1] = x;
        log_[x] = static_cast<std::uint32_t>(i);
        x = mul_poly(x, gen_code_);
    }
}

void Field::build_frobenius() {
    frob_exp_.assign(m_, 1);
    const std::uint64_t q1 = order_ - 1;
    for (unsigned e = 1; e < m_; ++e) frob_exp_[e] = mulmod_u64(frob_exp_[e - 1], p_, q1);
    if (has_log_table()) return;
    frob_images_.assign(m_, std::vector<Code>(m_));
    for (unsigned i = 0; i < m_; ++i) frob_images_[0][i] = pow_p_[i];
    for (unsigned e = 1; e < m_; ++e)
        for (unsigned i = 0; i < m_; ++i)
            frob_images_[e][i] = pow_poly(frob_images_[e - 1][i], p_);
}

Code Field::mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    if (has_log_table()) return exp_[log_[a] + log_[b]];
    return mul_poly(a, b);
}

Code Field::inv(Code a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (has_log_table()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    return pow_poly(a, order_ - 2);
}

Code Field::pow(Code a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (has_log_table()) {
        const std::uint64_t q1 = order_ - 1;
        return exp_[mulmod_u64(log_[a], e % q1, q1)];
    }
    return pow_poly(a, e % (order_ - 1) == 0 ? order_ - 1 : e % (order_ - 1));
}

Code Field::frob(Code a, unsigned e) const {
    e %= m_;
    if (e == 0 || a == 0) return a;
    if (has_log_table()) return exp_[mulmod_u64(log_[a], frob_exp_[e], order_ - 1)];
    const auto& img = frob_images_[e];
    Code r = 0;
    if (p_ == 2) {
        for (unsigned i = 0; i < m_; ++i)
            if ((a >> i) & 1) r ^= img[i];
        return r;
    }
    for (unsigned i = 0; i < m_; ++i) {
        const unsigned d = static_cast<unsigned>(a % p_);
        a /= p_;
        if (d) r = add(r, scale(img[i], d));
    }
    return r;
}

FieldElement Field::element(Code code) const {
    if (code >= order_) throw ValidationError("element code out of range");
    return {this, code};
}

FieldElement Field::from_coords(std::span<const unsigned> coords) const {
    if (coords.size() > m_) {
        for (std::size_t i = m_; i < coords.size(); ++i)
            if (coords[i] % p_) throw ValidationError("coordinate vector too long");
    }
    for (unsigned c : coords)
        if (c >= p_) throw ValidationError("coordinate out of range");
    return {this, pack(coords.first(std::min<std::size_t>(coords.size(), m_)))};
}

FieldElement Field::from_int(std::int64_t k) const {
    return {this, static_cast<Code>(mod_floor(k, p_))};
}

std::vector<unsigned> Field::coords(const FieldElement& x) const {
    if (x.field_ptr() != this) throw ValidationError("field mismatch");
    return unpack(x.code());
}

FieldElement Field::gen_pow(std::int64_t e) const {
    const FieldElement g = generator();
    if (g.is_zero()) {
        if (e <= 0) throw std::domain_error("non-positive power of zero");
        return zero();
    }
    return g.pow(e);
}

std::optional<std::uint64_t> Field::log(const FieldElement& x) const {
    if (!has_log_table() || x.is_zero() || x.field_ptr() != this) return std::nullopt;
    return log_[x.code()];
}

std::string Field::format(const FieldElement& x, Notation notation) const {
    if (x.field_ptr() != this) throw ValidationError("field mismatch");
    if (notation == Notation::power && has_log_table()) {
        if (x.is_zero()) return "0";
        const auto l = *log(x);
        if (l == 0) return "1";
        if (l == 1) return spec_.generator_name;
        return spec_.generator_name + "^" + std::to_string(l);
    }
    std::string s = "[";
    const auto d = unpack(x.code());
    for (unsigned i = 0; i < m_; ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

FieldElement Field::parse(std::string_view text) const {
    auto strip = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s, std::int64_t& out) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    };
    text = strip(text);
    if (text.empty()) throw ValidationError("empty field element");
    if (text.front() == '[') {
        if (text.back() != ']') throw ValidationError("unterminated coordinate vector");
        std::vector<unsigned> digits;
        std::string_view body = text.substr(1, text.size() - 2);
        while (!strip(body).empty()) {
            const auto comma = body.find(',');
            std::int64_t v = 0;
            if (!parse_int(strip(body.substr(0, comma)), v) || v < 0)
                throw ValidationError("bad coordinate in '" + std::string(text) + "'");
            digits.push_back(static_cast<unsigned>(v));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        return from_coords(digits);
    }
    std::int64_t k = 0;
    if (parse_int(text, k)) return from_int(k);
    const std::string& g = spec_.generator_name;
    if (text.substr(0, g.size()) == g) {
        std::string_view rest = strip(text.substr(g.size()));
        if (rest.empty()) return generator();
        if (rest.front() == '^') {
            rest = strip(rest.substr(1));
            if (!rest.empty() && rest.front() == '{' && rest.back() == '}') rest = strip(rest.substr(1, rest.size() - 2));
            if (parse_int(rest, k)) return gen_pow(k);
        }
    }
    throw ValidationError("cannot parse field element '" + std::string(text) + "'");
}

// ---- FrobeniusMap ----------------------------------------------------------

FrobeniusMap::FrobeniusMap(const Field& field, std::int64_t exponent)
    : field_(&field), e_(static_cast<unsigned>(mod_floor(exponent, field.degree()))) {}

unsigned FrobeniusMap::fixed_degree() const {
    return static_cast<unsigned>(std::gcd(e_, field_->degree()));
}

unsigned FrobeniusMap::order() const { return field_->degree() / fixed_degree(); }

FieldElement FrobeniusMap::operator()(const FieldElement& x) const {
    if (x.field_ptr() != field_) throw ValidationError("field mismatch");
    return {field_, field_->frob(x.code(), e_)};
}

FieldElement FrobeniusMap::apply(const FieldElement& x, std::int64_t k) const {
    if (x.field_ptr() != field_) throw ValidationError("field mismatch");
    const std::int64_t m = field_->degree();
    const auto e = static_cast<unsigned>(mod_floor(mod_floor(k, m) * e_, m));
    return {field_, field_->frob(x.code(), e)};
}

FrobeniusMap FrobeniusMap::pow(std::int64_t k) const {
    const std::int64_t m = field_->degree();
    return {*field_, mod_floor(mod_floor(k, m) * e_, m)};
}

FrobeniusMap FrobeniusMap::then(const FrobeniusMap& other) const {
    if (other.field_ != field_) throw ValidationError("field mismatch");
    return {*field_, static_cast<std::int64_t>(e_) + other.e_};
}

// ---- Conway polynomials ----------------------------------------------------

std::vector<unsigned> conway_polynomial(unsigned p, unsigned m) {
    // Descending coefficients.
    static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 0, 1, 1}},
        {{2, 4}, {1, 0, 0, 1, 1}},
        {{2, 5}, {1, 0, 0, 1, 0, 1}},
        {{2, 6}, {1, 0, 1, 1, 0, 1, 1}},
        {{2, 7}, {1, 0, 0, 0, 0, 0, 1, 1}},
        {{2, 8}, {1, 0, 0, 0, 1, 1, 1, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {{2, 10}, {1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1}},
        {{2, 12}, {1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1}},
        {{2, 14}, {1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1}},
        {{2, 16}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1}},
        {{2, 18}, {1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
        {{2, 20}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1}},
        {{2, 24}, {1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {1, 2, 2}},
        {{3, 3}, {1, 0, 2, 1}},
        {{3, 4}, {1, 2, 0, 0, 2}},
        {{3, 12}, {1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 2}},
        {{3, 16}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 2, 2, 1, 2}},
        {{5, 1}, {1, 3}},
        {{5, 3}, {1, 0, 3, 3}},
        {{5, 9}, {1, 0, 0, 0, 0, 0, 2, 0, 1, 3}},
    };
    auto it = table.find({p, m});
    if (it == table.end())
        throw ValidationError("no tabulated Conway polynomial for GF(" + std::to_string(p) + "^" +
                              std::to_string(m) + ")");
    return {it->second.rbegin(), it->second.rend()};
}

// ---- GF(p) linear algebra --------------------------------------------------

namespace gfp {

std::vector<Vec> row_reduce(std::vector<Vec> rows, unsigned p) {
    if (rows.empty()) return rows;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const unsigned iv = inv_mod_p(rows[r][c], p);
        for (auto& v : rows[r]) v = v * iv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const unsigned f = rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j)
                rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::size_t rank(std::vector<Vec> rows, unsigned p) { return row_reduce(std::move(rows), p).size(); }

std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t ncols, unsigned p) {
    auto red = row_reduce(rows, p);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& row : red) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(ncols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < red.size(); ++i) v[pivot_col[i]] = (p - red[i][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace gfp

gfp::Vec to_vec(const FieldElement& x) { return x.field().unpack(x.code()); }

std::vector<FieldElement> fixed_field_basis(const FrobeniusMap& phi) {
    const Field& f = phi.field();
    const unsigned m = f.degree();
    std::vector<gfp::Vec> rows(m, gfp::Vec(m, 0));
    for (unsigned c = 0; c < m; ++c) {
        std::vector<unsigned> e(m, 0);
        e[c] = 1;
        const FieldElement basis = f.from_coords(e);
        const auto img = to_vec(phi(basis) - basis);
        for (unsigned r = 0; r < m; ++r) rows[r][c] = img[r];
    }
    std::vector<FieldElement> out;
    for (const auto& v : gfp::kernel(rows, m, f.characteristic())) out.push_back(f.from_coords(v));
    return out;
}

std::size_t gfp_rank(std::span<const FieldElement> elems) {
    if (elems.empty()) return 0;
    std::vector<gfp::Vec> rows;
    rows.reserve(elems.size());
    for (const auto& e : elems) rows.push_back(to_vec(e));
    return gfp::rank(std::move(rows), elems.front().field().characteristic());
}

}  // namespace skewcodes
