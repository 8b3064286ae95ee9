#pragma once

// The tower K = GF(q) <= L = GF(q^mu) <= M = GF(q^n), n = mu*s, with
// sigma = tau^h on L, its extension theta = tau^k on M and the embedding eps.

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "skewcodes/field.hpp"

namespace skewcodes {

/// Exponents are in units of the q-Frobenius tau.
struct AutomorphismExtension {
    std::uint64_t q = 2;
    unsigned mu = 1;
    unsigned s = 1;
    unsigned n = 1;
    unsigned h = 1;
    unsigned k = 1;
};

/// k = a*mu + h with a the product of primes dividing s but not h, reduced
/// mod n; an explicit k is validated instead (gcd(k, n) = 1, k = h mod mu).
AutomorphismExtension extend_automorphism(std::uint64_t q, unsigned mu, unsigned h, unsigned s,
                                          std::optional<unsigned> k = std::nullopt);

/// Roots of L's modulus inside M compatible with sigma/theta, ordered by code.
std::vector<FieldElement> embedding_candidates(const Field& L, const Field& M, const FrobeniusMap& sigma,
                                               const FrobeniusMap& theta);
/// Smallest compatible root (by packed code, i.e. highest coordinate first).
FieldElement find_embedding(const Field& L, const Field& M, const FrobeniusMap& sigma, const FrobeniusMap& theta);

/// True iff {alpha, phi(alpha), ...} is a basis of the field over its phi-fixed subfield.
bool is_normal(const FieldElement& alpha, const FrobeniusMap& phi);
/// First normal element in a scan starting at seed mod |field|; preferred is
/// returned when it is normal.
FieldElement normal_element_search(const FrobeniusMap& phi, std::uint64_t seed = 0,
                                   std::optional<FieldElement> preferred = std::nullopt);

/// Any primitive element (tries the generator first).
FieldElement primitive_element(const Field& f);

class Tower {
  public:
    static std::shared_ptr<const Tower> make(std::shared_ptr<const Field> L, std::shared_ptr<const Field> M,
                                             const AutomorphismExtension& ext,
                                             std::optional<FieldElement> eps_override = std::nullopt);

    const Field& L() const { return *L_; }
    const Field& M() const { return *M_; }
    std::shared_ptr<const Field> L_ptr() const { return L_; }
    std::shared_ptr<const Field> M_ptr() const { return M_; }
    const AutomorphismExtension& ext() const { return ext_; }
    unsigned n() const { return ext_.n; }
    unsigned mu() const { return ext_.mu; }
    unsigned s() const { return ext_.s; }

    const FrobeniusMap& sigma() const { return sigma_; }
    const FrobeniusMap& theta() const { return theta_; }
    /// theta^mu, of order s; fixes eps(L).
    const FrobeniusMap& pi() const { return pi_; }
    /// eps(generator of L).
    FieldElement epsilon_image() const { return eps_; }

    FieldElement embed(const FieldElement& x) const;
    /// Preimage under eps, or nullopt when x is not in eps(L).
    std::optional<FieldElement> pull_back(const FieldElement& x) const;
    bool in_image(const FieldElement& x) const { return pull_back(x).has_value(); }

  private:
    Tower() = default;

    std::shared_ptr<const Field> L_, M_;
    AutomorphismExtension ext_;
    FrobeniusMap sigma_, theta_, pi_;
    FieldElement eps_;
    std::vector<Code> basis_images_;             // eps(b^i)
    std::unordered_map<Code, Code> inverse_;     // populated for small L
};

}  // namespace skewcodes
