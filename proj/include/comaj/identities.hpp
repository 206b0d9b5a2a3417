#pragma once

// Both sides of every generating-function identity, each computed through its
// own code path, and the drivers that compare them exactly.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comaj/engine.hpp"
#include "comaj/qpoly.hpp"
#include "json.hpp"

namespace comaj {

/// k * n(n-1)/2, the largest total degree any comaj numerator can reach.
int exact_degree_bound(int n, int k);

// --- comaj sides -----------------------------------------------------------

/// sum over T in SYT(lambda) and sigma-vector in S_n^{k-1} of
/// prod_i q_i^{comaj^i_T(sigma-vector)}; exact, truncation (k, bound).
QPoly schur_comaj_formula(const Partition& lambda, int k, unsigned jobs = 1);

/// The same sum with a single descent set R in place of des(T).
QPoly fundamental_comaj_formula(const DescentSet& R, int n, int k, unsigned jobs = 1);

/// sum of q^P over P in the labeled-tableau set T^k_lambda, built from the
/// fillings of labeled_tableau().
QPoly tableaux_weight_sum(const Partition& lambda, int k, unsigned jobs = 1);

/// sum_{T, sigma-vector} q^{comaj_T(sigma-vector, identity)}, one variable.
QPoly harmonics_multiplicity_comaj(const Partition& lambda, int k, unsigned jobs = 1);

/// sum over tuples with sigma^1 ... sigma^k = identity of prod q_i^{comaj(sigma^i)};
/// sigma^k is forced as the inverse of the product of the others.
QPoly row_case_product_sum(int n, int k, unsigned jobs = 1);

/// sum over sigma in S_n of q_1^{comaj(sigma^{-1})} q_2^{comaj(sigma)}.
QPoly inverse_pair_sum(int n);

// --- enumeration and character oracles -------------------------------------

/// F_{n,R} at every monomial in q_1..q_k: sum of q^S over S in (N^k)^n with
/// s^i <= s^{i+1} lexicographically, strictly when i in R, truncated at D.
QPoly fundamental_principal_enum(const DescentSet& R, int n, int k, Truncation t);

/// s_lambda at every monomial in q_1..q_k as a sum over semistandard
/// fillings, grouped by the standard tableau they standardize to.
QPoly schur_principal_tableaux(const Partition& lambda, int k, Truncation t);

/// sum over mu of chi^lambda(mu)/z_mu * [(q;q)_n prod_j 1/(1-q^{mu_j})]^k,
/// kept in exact rationals; throws std::logic_error unless every final
/// coefficient is an integer. Requires t.k == 1 and t.degree >= bound.
QPoly harmonics_multiplicity_character(const Partition& lambda, int k, Truncation t);

// --- verification ----------------------------------------------------------

struct Counterexample {
    std::string check;
    std::string left_side;
    std::string right_side;
    ExponentVector exponent;
    std::string left_coeff;
    std::string right_coeff;
    nlohmann::json instance;  // sub-instance of a sweep, null otherwise
};

struct VerificationReport {
    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    bool passed = true;
    std::vector<std::pair<std::string, std::string>> digests;  // side name -> sha256
    std::vector<std::string> checks;                            // descriptions of passed checks
    std::optional<Counterexample> counterexample;
    std::string failure;  // non-polynomial failure (dimension counts, ...)
    double elapsed_ms = 0.0;
};

/// Elapsed time is emitted only when include_timing is set.
nlohmann::json to_json(const VerificationReport& r, bool include_timing = false);

/// Pochhammer x Jacobi-Trudi = comaj formula = T^k_lambda weight sum, and
/// Jacobi-Trudi = semistandard enumeration. Requires t.k == k, t.degree >= bound.
VerificationReport verify_theorem_finite(const Partition& lambda, int k, Truncation t, unsigned jobs = 1);

/// Comaj path = character path for the graded multiplicity of lambda in
/// H_n^{(x)k}, plus the value f^lambda (n!)^{k-1} at q = 1.
VerificationReport verify_theorem_kronecker(const Partition& lambda, int k, unsigned jobs = 1);

/// Pochhammer x fundamental enumeration = fundamental comaj formula up to D.
VerificationReport verify_quasi(const DescentSet& R, int n, int k, Truncation t, unsigned jobs = 1);

/// Row shape: comaj formula = product-identity enumeration, the k = 2 inverse
/// pair form, and the collapsed Hilbert series against the character oracle.
VerificationReport verify_row_case(int n, int k, unsigned jobs = 1);

/// One instance of the first-coordinate peeling identity with every entry
/// bounded by `bound` and truncation degree `bound`.
VerificationReport verify_prop41(const DescentSet& R, const DescentSet& D_target, const Permutation& sigma,
                                 int r, int bound);

/// verify_prop41 over every R, D_target and sigma for the given n and r.
VerificationReport verify_prop41_sweep(int n, int r, int bound);

/// The k = m numerator with variables reversed equals the k = m+1 numerator,
/// reversed, at q_{m+1} = 0.
VerificationReport verify_infinite_reindex(const Partition& lambda, int m, unsigned jobs = 1);

}  // namespace comaj
