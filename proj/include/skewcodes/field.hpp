#pragma once

// Finite fields GF(p^m) in polynomial basis over GF(p), Frobenius maps, and a
// handful of GF(p)-linear algebra helpers used to reason about subfields.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewcodes {

/// Packed element coordinates: sum of c_i * p^i (plain bit vector when p = 2).
using Code = std::uint64_t;

class Field;

/// Raised for malformed field, tower or code parameters.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct FieldSpec {
    unsigned p = 2;
    /// Ascending coefficients of a monic irreducible polynomial over GF(p).
    std::vector<unsigned> modulus;
    std::string generator_name = "a";
};

/// Element of a Field. Holds a non-owning pointer to its field; the field
/// must outlive every element created from it.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(const Field* field, Code code) : field_(field), code_(code) {}

    const Field& field() const;
    const Field* field_ptr() const { return field_; }
    Code code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;

    bool operator==(const FieldElement& o) const { return field_ == o.field_ && code_ == o.code_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    void same_field(const FieldElement& o) const;

    const Field* field_ = nullptr;
    Code code_ = 0;
};

enum class Notation { power, coords };

class Field {
  public:
    /// Validates p (prime), the modulus (monic, degree >= 1, irreducible via
    /// gcd(x^(p^d) - x, f) for proper divisors d of m) and builds log tables
    /// when the field has at most 2^20 elements and x is primitive.
    static std::shared_ptr<const Field> make(const FieldSpec& spec);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    const FieldSpec& spec() const { return spec_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint64_t order() const { return order_; }
    const std::string& generator_name() const { return spec_.generator_name; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    /// Class of x modulo the defining polynomial.
    FieldElement generator() const { return {this, gen_code_}; }
    FieldElement element(Code code) const;
    FieldElement from_coords(std::span<const unsigned> coords) const;
    FieldElement from_int(std::int64_t k) const;
    std::vector<unsigned> coords(const FieldElement& x) const;
    /// generator()^e, negative exponents allowed for nonzero generator.
    FieldElement gen_pow(std::int64_t e) const;

    bool has_log_table() const { return !log_.empty(); }
    /// Discrete log to base generator(); only available with log tables.
    std::optional<std::uint64_t> log(const FieldElement& x) const;

    std::string format(const FieldElement& x, Notation notation = Notation::power) const;
    FieldElement parse(std::string_view text) const;

    // Raw kernels on packed codes.
    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code pow(Code a, std::uint64_t e) const;
    /// a^(p^e) for e in [0, m).
    Code frob(Code a, unsigned e) const;
    Code scale(Code a, unsigned digit) const;

    std::vector<unsigned> unpack(Code a) const;
    Code pack(std::span<const unsigned> digits) const;

  private:
    explicit Field(const FieldSpec& spec);

    Code mul_poly(Code a, Code b) const;
    Code pow_poly(Code a, std::uint64_t e) const;
    void build_tables();
    void build_frobenius();

    FieldSpec spec_;
    unsigned p_ = 2;
    unsigned m_ = 1;
    std::uint64_t order_ = 2;
    Code gen_code_ = 0;
    std::vector<std::uint64_t> pow_p_;  // p^i, i <= m
    std::uint64_t mod_bits_ = 0;        // p == 2: modulus without the leading term

    std::vector<Code> exp_;             // size 2 (order - 1)
    std::vector<std::uint32_t> log_;    // size order
    std::vector<std::uint64_t> frob_exp_; // p^e mod (order - 1)
    // frob_images_[e][i] = (x^i)^(p^e); used without tables.
    std::vector<std::vector<Code>> frob_images_;
};

/// The automorphism x -> x^(p^e) of a field.
class FrobeniusMap {
  public:
    FrobeniusMap() = default;
    FrobeniusMap(const Field& field, std::int64_t exponent);
    static FrobeniusMap identity(const Field& field) { return {field, 0}; }

    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_; }
    unsigned exponent() const { return e_; }
    /// m / gcd(e, m).
    unsigned order() const;
    /// Degree over GF(p) of the fixed subfield, gcd(e, m).
    unsigned fixed_degree() const;

    FieldElement operator()(const FieldElement& x) const;
    /// Applies this map k times (k may be negative).
    FieldElement apply(const FieldElement& x, std::int64_t k) const;
    FrobeniusMap pow(std::int64_t k) const;
    FrobeniusMap inverse() const { return pow(-1); }
    FrobeniusMap then(const FrobeniusMap& other) const;

    bool operator==(const FrobeniusMap& o) const { return field_ == o.field_ && e_ == o.e_; }
    bool operator!=(const FrobeniusMap& o) const { return !(*this == o); }

  private:
    const Field* field_ = nullptr;
    unsigned e_ = 0;
};

bool is_prime(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Known Conway polynomials (ascending coefficients) for the small fields
/// used in fixtures; throws ValidationError for pairs that are not tabulated.
std::vector<unsigned> conway_polynomial(unsigned p, unsigned m);

namespace gfp {

// Dense linear algebra over GF(p) on digit vectors.
using Vec = std::vector<unsigned>;

std::size_t rank(std::vector<Vec> rows, unsigned p);
/// Basis of {x : A x = 0} for A given as rows; each basis vector has ncols entries.
std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t ncols, unsigned p);
/// Reduced row echelon form, zero rows dropped.
std::vector<Vec> row_reduce(std::vector<Vec> rows, unsigned p);

}  // namespace gfp

/// Coordinates of a field element as a GF(p) digit vector.
gfp::Vec to_vec(const FieldElement& x);
/// GF(p)-basis of the subfield fixed by phi, as elements of phi's field.
std::vector<FieldElement> fixed_field_basis(const FrobeniusMap& phi);
/// GF(p)-rank of the given elements.
std::size_t gfp_rank(std::span<const FieldElement> elems);

}  // namespace skewcodes
