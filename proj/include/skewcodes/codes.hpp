#pragma once

// Skew cyclic codes with a designed distance from a Hartmann-Tzeng root set.

#include <memory>
#include <optional>
#include <vector>

#include "skewcodes/matrix.hpp"
#include "skewcodes/skew_poly.hpp"
#include "skewcodes/tower.hpp"

namespace skewcodes {

struct HTParams {
    int b = 0;
    int delta = 2;
    int r = 0;
    int t1 = 1;
    int t2 = 1;
    int n = 1;

    /// Throws ValidationError. The gcd(n, t2) < delta condition only matters
    /// when r > 0 and is skipped otherwise.
    void validate() const;
    bool operator==(const HTParams&) const = default;
};

struct DefiningSet {
    std::vector<int> indices;  // sorted, distinct, in [0, n)
    int n = 0;
    int mu = 1;
    int s = 1;
    bool closed = false;

    bool contains(int i) const;
    std::size_t size() const { return indices.size(); }
    bool operator==(const DefiningSet&) const = default;
};

/// {b + i*t1 + l*t2 : 0 <= i <= delta-2, 0 <= l <= r} mod n.
DefiningSet ht_set(const HTParams& p, int mu = 1, int s = 1);
/// Closure under i -> i + mu mod n.
DefiningSet coset_closure(const DefiningSet& t);
/// {i : x - theta^i(beta) right-divides g}.
DefiningSet defining_set_of(const SkewPolynomial& g, const FieldElement& beta, int n, int mu = 1, int s = 1);

struct BoundResult {
    int bound = 0;
    HTParams witness;
};

/// True when T_{b,delta,r,t1,t2} is admissible for n and contained in t.
bool ht_admissible(const DefiningSet& t, const HTParams& p);
/// Largest delta + r over admissible parameter sets contained in t, with the
/// lexicographically least (b, delta, r, t1, t2) witness. Returns bound 0 for
/// an empty set.
BoundResult ht_bound(const DefiningSet& t);

class SkewCyclicCode {
  public:
    std::shared_ptr<const Tower> tower;
    FieldElement alpha, beta;
    HTParams params;
    std::optional<int> bch_t;
    DefiningSet T, T_closed;
    SkewPolynomial g_T;      // over M
    SkewPolynomial g_bar;    // over M, coefficients in eps(L)
    SkewPolynomial g_bar_L;  // same polynomial in L[x;sigma]
    int n = 0;
    int dim = 0;
    int designed_distance = 0;

    const Field& L() const { return tower->L(); }
    const Field& M() const { return tower->M(); }
};

/// Throws ValidationError when alpha is not normal or the closure is all of C_n.
SkewCyclicCode build_code(std::shared_ptr<const Tower> tower, const FieldElement& alpha, const HTParams& params);
SkewCyclicCode build_bch(std::shared_ptr<const Tower> tower, const FieldElement& alpha, int delta, int t);

using Word = std::vector<FieldElement>;

/// Coefficients of m * g_bar in L, length n; m has degree < dim.
Word encode(const SkewCyclicCode& code, const SkewPolynomial& message);
Word encode(const SkewCyclicCode& code, const Word& message);
SkewPolynomial word_polynomial(const FrobeniusMap& twist, const Word& w);
bool is_codeword(const SkewCyclicCode& code, const Word& v);
/// Right quotient of a codeword by g_bar.
SkewPolynomial message_of(const SkewCyclicCode& code, const Word& codeword);
int hamming_weight(const Word& w);

/// n x (delta-1) over M with entry (i, j) = theta^{i + t*j}(alpha); needs a BCH code.
Matrix parity_check_matrix(const SkewCyclicCode& code);
/// dim x n over L; row i holds x^i * g_bar.
Matrix generator_matrix(const SkewCyclicCode& code);

class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Exact minimum distance by enumerating every message. Parallel kernel:
/// normalised messages, prefix sums and a shared running minimum.
int min_distance_bruteforce(const SkewCyclicCode& code, std::uint64_t cap = std::uint64_t{1} << 24, int jobs = 0);
/// Serial reference: m * g_bar for every nonzero message m.
int min_distance_bruteforce_serial(const SkewCyclicCode& code, std::uint64_t cap = std::uint64_t{1} << 24);
/// Exact minimum distance of an M-linear code (s = 1) from its parity checks:
/// the smallest number of linearly dependent rows of the check matrix over
/// the closed defining set.
int min_distance_supports(const SkewCyclicCode& code);

}  // namespace skewcodes
