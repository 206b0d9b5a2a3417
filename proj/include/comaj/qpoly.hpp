#pragma once

// Exact multivariate q-series in q_1..q_k with arbitrary-precision integer
// coefficients, truncated by total degree, and the principal evaluations of
// power-sum, homogeneous and Schur functions.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "comaj/perm.hpp"

namespace comaj {

/// Exponents of q_1..q_k.
using ExponentVector = std::vector<std::uint32_t>;

std::uint64_t total_degree(const ExponentVector& e) noexcept;

/// Ascending total degree, ties broken lexicographically on the exponents.
struct GradedLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const noexcept;
};

/// Number of variables and the total-degree bound D.
struct Truncation {
    int k = 1;
    int degree = 0;

    Truncation() = default;
    /// Throws std::invalid_argument unless k >= 1 and degree >= 0.
    Truncation(int k, int degree);

    bool operator==(const Truncation&) const = default;
};

/// A polynomial in q_1..q_k, or a power series known up to total degree D.
/// Terms of degree above D are discarded by every operation; no stored
/// coefficient is zero.
class QPoly {
public:
    using Terms = std::map<ExponentVector, mpz_class, GradedLexLess>;

    explicit QPoly(Truncation t) : trunc_(t) {}

    static QPoly zero(Truncation t) { return QPoly(t); }
    static QPoly one(Truncation t);
    static QPoly monomial(Truncation t, const ExponentVector& e, const mpz_class& c = 1);
    /// q_var, 1-based.
    static QPoly variable(Truncation t, int var);

    Truncation truncation() const noexcept { return trunc_; }
    int nvars() const noexcept { return trunc_.k; }
    int degree_bound() const noexcept { return trunc_.degree; }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    mpz_class coeff(const ExponentVector& e) const;

    /// Adds c q^e; silently drops it if deg(e) > D.
    void add_term(const ExponentVector& e, const mpz_class& c);

    /// Same polynomial with the bound lowered to `degree` (must not exceed D).
    QPoly restrict_degree(int degree) const;

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(const QPoly& other);
    QPoly& operator*=(const mpz_class& s);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const mpz_class& s) { return a *= s; }
    friend QPoly operator*(const mpz_class& s, QPoly a) { return a *= s; }
    QPoly operator-() const;

    /// Exact division of every coefficient; throws std::logic_error if any
    /// coefficient is not divisible.
    QPoly divide_exact(const mpz_class& d) const;

    /// Sum of all coefficients (the value at q_1 = ... = q_k = 1 of a polynomial).
    mpz_class coefficient_sum() const;

    /// Coefficientwise equality; throws std::invalid_argument if the
    /// truncations differ.
    friend bool operator==(const QPoly& a, const QPoly& b);

private:
    void require_same(const QPoly& other, const char* op) const;

    Truncation trunc_;
    Terms terms_;
};

/// The graded-lex-first exponent at which a and b differ, if any.
struct TermMismatch {
    ExponentVector exponent;
    mpz_class left;
    mpz_class right;
};
std::optional<TermMismatch> first_difference(const QPoly& a, const QPoly& b);

/// Inverse of a power series with constant term 1, up to degree D.
QPoly geometric_inverse(const QPoly& unit);

/// (q;q)_n = prod_{j=1}^n (1 - q^j) in q_var.
QPoly pochhammer_qq(int var, int n, Truncation t);

/// prod_{i=1}^k (q_i;q_i)_n.
QPoly pochhammer_product(int n, Truncation t);

/// p_r evaluated at every monomial in q_1..q_k: prod_i 1/(1 - q_i^r).
QPoly p_principal(int r, Truncation t);

/// h_0, ..., h_m evaluated at every monomial in q_1..q_k, by Newton's identity.
std::vector<QPoly> h_principal_upto(int m, Truncation t);
QPoly h_principal(int m, Truncation t);

/// s_lambda at every monomial in q_1..q_k via the Jacobi-Trudi determinant.
QPoly schur_principal_jt(const Partition& lambda, Truncation t);

/// Sets q_i = q for all i.
QPoly collapse_to_single_variable(const QPoly& p);

/// Renames q_i to q_{perm(i)}; perm must be a permutation of {1..k}.
QPoly permute_variables(const QPoly& p, const Permutation& perm);

/// q_i -> q_{k-i+1}.
QPoly reverse_variables(const QPoly& p);

/// Same polynomial viewed in k' >= k variables.
QPoly extend_variables(const QPoly& p, int k);

/// The part of p not divisible by q_var (i.e. p with q_var = 0).
QPoly set_variable_zero(const QPoly& p, int var);

/// "q + q^2" for k = 1, "1 + q_1*q_2" otherwise; "0" for the zero polynomial.
std::string to_string(const QPoly& p);

}  // namespace comaj
