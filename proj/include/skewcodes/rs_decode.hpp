#pragma once

// Decoding skew BCH codes through the permutation x^i -> y^{iu} onto a skew
// Reed-Solomon code in M[y; theta^t] and a PGZ-style syndrome decoder.

#include <optional>
#include <string>
#include <vector>

#include "skewcodes/codes.hpp"

namespace skewcodes {

struct RsContext {
    int n = 0;
    int t = 1;
    int u = 1;  // t*u = 1 mod n
    int delta = 2;
    int tau = 0;  // (delta - 1) / 2
    FrobeniusMap rho;
    FieldElement alpha;
    FieldElement beta_prime;  // alpha^{-1} rho(alpha)
    SkewPolynomial g_prime;   // lclm of y - rho^i(beta'), i < delta - 1
    // Inverse of the GF(p) basis {kappa_m rho^k(alpha)}, kappa_m a GF(p)-basis
    // of the fixed field K; column index k * kdeg + m.
    std::vector<gfp::Vec> coord_inverse;
    unsigned kdeg = 1;
};

RsContext rs_generator(const FrobeniusMap& theta, const FieldElement& alpha, int n, int t, int delta);
/// Also checks g' = gcrd(phi(g_T), y^n - 1) for the code.
RsContext rs_context(const SkewCyclicCode& code);

/// Component i of the result is v[i*t mod n].
std::vector<FieldElement> permute(const std::vector<FieldElement>& v, int t);
std::vector<FieldElement> unpermute(const std::vector<FieldElement>& v, int t);
/// x^i -> y^{iu mod n}; the result lives in M[y; theta^t] reduced mod y^n - 1.
SkewPolynomial phi_map(const SkewPolynomial& f, int t, int n);
/// y^j -> x^{jt mod n}.
SkewPolynomial phi_inverse(const SkewPolynomial& f, const FrobeniusMap& theta, int t, int n);

/// s_i = sum_j w_j rho^{i+j}(alpha), i = 0 .. delta-2.
std::vector<FieldElement> syndromes(const std::vector<FieldElement>& w, const RsContext& ctx);
/// (tau+1) x tau with H[i][j] = rho^{-j}(s_{i+j}).
Matrix syndrome_matrix(const std::vector<FieldElement>& s, int tau, const FrobeniusMap& rho);

struct LocatorResult {
    int nu = 0;
    Matrix echelon;  // reduced column echelon form of the leading nu+1 rows
    SkewPolynomial lambda;
    bool ok = true;
};

LocatorResult locator(const Matrix& h, const FrobeniusMap& rho);
/// k with rho^k(beta') a right root of lambda.
std::vector<int> right_root_positions(const SkewPolynomial& lambda, const RsContext& ctx);
/// Union of the supports, in the normal basis rho^k(alpha), of the root space
/// of the operator sum lambda_i rho^i. Equals right_root_positions when the
/// error values are independent over K, and still recovers every position
/// when they are not (then rank H < weight). nullopt when the root space has
/// K-dimension below deg lambda.
std::optional<std::vector<int>> error_positions(const SkewPolynomial& lambda, const RsContext& ctx);

struct ErrorValues {
    Matrix system;  // A[i][j] = rho^{i + k_j}(alpha)
    std::vector<FieldElement> rhs;
    std::optional<std::vector<FieldElement>> values;
};

ErrorValues error_values(const std::vector<int>& positions, const std::vector<FieldElement>& s, const RsContext& ctx);

enum class DecodeStatus { ok, too_many_errors, not_in_L, inconsistent };
const char* to_string(DecodeStatus s);

struct DecodeReport {
    DecodeStatus status = DecodeStatus::ok;
    std::string stage;  // stage that failed, empty on success
    Word received;
    std::vector<FieldElement> permuted;
    std::vector<FieldElement> syndromes;
    Matrix syndrome_matrix;
    int nu = 0;  // rank of the syndrome matrix
    Matrix echelon;
    SkewPolynomial locator;
    std::vector<int> positions_y;
    std::vector<int> positions_x;
    Matrix system;
    std::vector<FieldElement> rhs;
    std::vector<FieldElement> values;
    Word error;
    Word codeword;
    SkewPolynomial message;
};

DecodeReport decode_bch(const SkewCyclicCode& code, const RsContext& ctx, const Word& v);
DecodeReport decode_bch(const SkewCyclicCode& code, const Word& v);

/// OpenMP over words; jobs <= 0 uses the runtime default.
std::vector<DecodeReport> decode_batch(const SkewCyclicCode& code, const std::vector<Word>& words, int jobs = 0);
std::vector<DecodeReport> decode_batch_serial(const SkewCyclicCode& code, const std::vector<Word>& words);

}  // namespace skewcodes
