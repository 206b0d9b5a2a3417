#include "comaj/identities.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "comaj/parallel.hpp"
#include "comaj/qpoly_io.hpp"

namespace comaj {

int exact_degree_bound(int n, int k) { return k * n * (n - 1) / 2; }

namespace {

// ---------------------------------------------------------------------------
// Monomial counting with int64 multiplicities, packed base (max+1).

class MonomialCounter {
public:
    MonomialCounter(int k, std::uint32_t max_exponent)
        : k_(k), base_(static_cast<std::uint64_t>(max_exponent) + 1)
    {
        unsigned __int128 span = 1;
        for (int i = 0; i < k_; ++i) {
            span *= base_;
            if (span > (static_cast<unsigned __int128>(1) << 62))
                throw std::invalid_argument("exponent range too large to enumerate");
        }
        span_ = static_cast<std::uint64_t>(span);
        if (span_ <= (1ULL << 22))
            dense_.assign(span_, 0);
    }

    template <class Range>
    void add(const Range& exponents, std::int64_t mult = 1)
    {
        std::uint64_t key = 0;
        for (auto it = std::rbegin(exponents); it != std::rend(exponents); ++it)
            key = key * base_ + static_cast<std::uint64_t>(*it);
        bump(key, mult);
    }

    void merge(const MonomialCounter& other)
    {
        if (!dense_.empty()) {
            for (std::uint64_t key = 0; key < span_; ++key)
                if (other.dense_[key] != 0)
                    bump(key, other.dense_[key]);
        } else {
            for (const auto& [key, c] : other.sparse_)
                bump(key, c);
        }
    }

    QPoly to_qpoly(Truncation t) const
    {
        QPoly out(t);
        auto emit = [&](std::uint64_t key, std::int64_t c) {
            ExponentVector e(static_cast<std::size_t>(k_));
            for (auto& x : e) {
                x = static_cast<std::uint32_t>(key % base_);
                key /= base_;
            }
            out.add_term(e, mpz_class(static_cast<long>(c)));
        };
        if (!dense_.empty()) {
            for (std::uint64_t key = 0; key < span_; ++key)
                if (dense_[key] != 0)
                    emit(key, dense_[key]);
        } else {
            for (const auto& [key, c] : sparse_)
                emit(key, c);
        }
        return out;
    }

private:
    void bump(std::uint64_t key, std::int64_t mult)
    {
        std::int64_t& slot = dense_.empty() ? sparse_[key] : dense_[key];
        if (__builtin_add_overflow(slot, mult, &slot))
            throw std::overflow_error("monomial multiplicity overflow");
    }

    int k_;
    std::uint64_t base_;
    std::uint64_t span_ = 0;
    std::vector<std::int64_t> dense_;
    std::unordered_map<std::uint64_t, std::int64_t> sparse_;
};

// ---------------------------------------------------------------------------
// Streaming over S_n^{len} in mixed-radix order (first coordinate most significant).

std::uint64_t tuple_count(std::uint64_t radix, int len)
{
    unsigned __int128 total = 1;
    for (int i = 0; i < len; ++i) {
        total *= radix;
        if (total > (static_cast<unsigned __int128>(1) << 62))
            throw std::invalid_argument("permutation-vector space too large to enumerate");
    }
    return static_cast<std::uint64_t>(total);
}

template <class Fn>
void visit_tuples(const std::vector<Permutation>& all, int len, std::uint64_t begin, std::uint64_t end, Fn&& fn)
{
    const std::uint64_t radix = all.size();
    std::vector<std::uint64_t> digit(static_cast<std::size_t>(len));
    std::uint64_t x = begin;
    for (int i = len - 1; i >= 0; --i) {
        digit[static_cast<std::size_t>(i)] = x % radix;
        x /= radix;
    }
    std::vector<Permutation> tuple;
    tuple.reserve(static_cast<std::size_t>(len));
    for (auto d : digit)
        tuple.push_back(all[d]);

    for (std::uint64_t t = begin; t < end; ++t) {
        fn(static_cast<const std::vector<Permutation>&>(tuple));
        for (int i = len - 1; i >= 0; --i) {
            auto& d = digit[static_cast<std::size_t>(i)];
            if (++d < radix) {
                tuple[static_cast<std::size_t>(i)] = all[d];
                break;
            }
            d = 0;
            tuple[static_cast<std::size_t>(i)] = all[0];
        }
    }
}

constexpr std::uint64_t tuple_chunk = 256;

// sum over sigma-vector in S_n^{k-1} of fn(PermVector, counter), reduced across jobs.
template <class Fn>
MonomialCounter reduce_over_perm_vectors(int n, int k, unsigned jobs, const MonomialCounter& init, Fn fn)
{
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    const auto all = all_permutations(n);
    const std::uint64_t count = tuple_count(all.size(), k - 1);
    return chunked_reduce(
        count, jobs, tuple_chunk, init,
        [&](std::uint64_t begin, std::uint64_t end, MonomialCounter& acc) {
            visit_tuples(all, k - 1, begin, end, [&](const std::vector<Permutation>& tuple) {
                fn(PermVector(n, tuple), acc);
            });
        },
        [](MonomialCounter& into, const MonomialCounter& from) { into.merge(from); });
}

std::uint32_t max_comaj(int n) { return static_cast<std::uint32_t>(n * (n - 1) / 2); }

QPoly comaj_numerator(const std::vector<DescentSet>& Rs, int n, int k, unsigned jobs)
{
    const MonomialCounter init(k, max_comaj(n));
    auto counter = reduce_over_perm_vectors(n, k, jobs, init, [&](const PermVector& pv, MonomialCounter& acc) {
        for (const auto& R : Rs)
            acc.add(comaj_components(R, pv));
    });
    return counter.to_qpoly(Truncation(k, exact_degree_bound(n, k)));
}

std::vector<DescentSet> descent_sets(const std::vector<StandardTableau>& tableaux)
{
    std::vector<DescentSet> out;
    out.reserve(tableaux.size());
    for (const auto& T : tableaux)
        out.push_back(des(T));
    return out;
}

// An exact polynomial re-expressed under total-degree bound D.
QPoly exact_at_degree(const QPoly& exact, int D)
{
    if (D <= exact.degree_bound())
        return exact.restrict_degree(D);
    QPoly out(Truncation(exact.nvars(), D));
    for (const auto& [e, c] : exact.terms())
        out.add_term(e, c);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Comaj sides

QPoly schur_comaj_formula(const Partition& lambda, int k, unsigned jobs)
{
    return comaj_numerator(descent_sets(enumerate_syt(lambda)), lambda.size(), k, jobs);
}

QPoly fundamental_comaj_formula(const DescentSet& R, int n, int k, unsigned jobs)
{
    if (R.n() != n)
        throw std::invalid_argument("fundamental_comaj_formula: R is not a subset of {1..n-1}");
    return comaj_numerator({R}, n, k, jobs);
}

QPoly tableaux_weight_sum(const Partition& lambda, int k, unsigned jobs)
{
    const int n = lambda.size();
    const auto tableaux = enumerate_syt(lambda);
    const MonomialCounter init(k, max_comaj(n));
    auto counter = reduce_over_perm_vectors(n, k, jobs, init, [&](const PermVector& pv, MonomialCounter& acc) {
        for (const auto& T : tableaux)
            acc.add(weight(labeled_tableau(T, pv).filling, k));
    });
    return counter.to_qpoly(Truncation(k, exact_degree_bound(n, k)));
}

QPoly harmonics_multiplicity_comaj(const Partition& lambda, int k, unsigned jobs)
{
    const int n = lambda.size();
    const auto Rs = descent_sets(enumerate_syt(lambda));
    const int bound = exact_degree_bound(n, k);
    const MonomialCounter init(1, static_cast<std::uint32_t>(bound));
    auto counter = reduce_over_perm_vectors(n, k, jobs, init, [&](const PermVector& pv, MonomialCounter& acc) {
        for (const auto& R : Rs) {
            const auto parts = comaj_components(R, pv);
            const std::int64_t total = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
            acc.add(std::array<std::int64_t, 1>{total});
        }
    });
    return counter.to_qpoly(Truncation(1, bound));
}

QPoly row_case_product_sum(int n, int k, unsigned jobs)
{
    const MonomialCounter init(k, max_comaj(n));
    const Permutation id = Permutation::identity(n);
    auto counter = reduce_over_perm_vectors(n, k, jobs, init, [&](const PermVector& pv, MonomialCounter& acc) {
        std::vector<std::int64_t> e;
        e.reserve(static_cast<std::size_t>(k));
        Permutation product = id;
        for (const auto& s : pv.perms()) {
            e.push_back(comaj(s));
            product = compose(product, s);
        }
        e.push_back(comaj(inverse(product)));
        acc.add(e);
    });
    return counter.to_qpoly(Truncation(k, exact_degree_bound(n, k)));
}

QPoly inverse_pair_sum(int n)
{
    QPoly out(Truncation(2, exact_degree_bound(n, 2)));
    for (const auto& s : all_permutations(n))
        out.add_term({static_cast<std::uint32_t>(comaj(inverse(s))), static_cast<std::uint32_t>(comaj(s))}, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Chain enumeration oracle.
//
// Sums q^S over chains s^1 <= s^2 <= ... <= s^n in N^k (lex order, strict
// where i in R) of total degree <= D. Sweeping the lex-sorted vectors from
// the top, G_i holds the generating function of all chains s^i..s^n whose
// first element is at or above the current vector, so each level is one
// monomial shift of the level above.

namespace {

class MonomialIndex {
public:
    explicit MonomialIndex(Truncation t) : k_(t.k), D_(static_cast<std::uint32_t>(t.degree)), base_(D_ + 1u)
    {
        unsigned __int128 span = 1;
        for (int i = 0; i < k_; ++i) {
            span *= base_;
            if (span > (static_cast<unsigned __int128>(1) << 24))
                throw std::invalid_argument("truncation too large for chain enumeration");
        }
        lookup_.assign(static_cast<std::size_t>(span), -1);
        ExponentVector e(static_cast<std::size_t>(k_), 0);
        collect(0, D_, e);
        std::sort(vectors_.begin(), vectors_.end());
        for (std::size_t idx = 0; idx < vectors_.size(); ++idx) {
            const auto key = pack(vectors_[idx]);
            keys_.push_back(key);
            degrees_.push_back(static_cast<std::uint32_t>(total_degree(vectors_[idx])));
            lookup_[key] = static_cast<std::int32_t>(idx);
        }
    }

    std::size_t size() const noexcept { return vectors_.size(); }
    const ExponentVector& vector(std::size_t idx) const noexcept { return vectors_[idx]; }
    std::uint64_t key(std::size_t idx) const noexcept { return keys_[idx]; }
    std::uint32_t degree(std::size_t idx) const noexcept { return degrees_[idx]; }
    std::uint32_t max_degree() const noexcept { return D_; }

    std::uint64_t pack(const ExponentVector& e) const noexcept
    {
        std::uint64_t key = 0;
        for (auto it = e.rbegin(); it != e.rend(); ++it)
            key = key * base_ + *it;
        return key;
    }

    std::size_t index_of_key(std::uint64_t key) const noexcept
    {
        return static_cast<std::size_t>(lookup_[static_cast<std::size_t>(key)]);
    }

private:
    void collect(int var, std::uint32_t budget, ExponentVector& e)
    {
        if (var == k_) {
            vectors_.push_back(e);
            return;
        }
        for (std::uint32_t x = 0; x <= budget; ++x) {
            e[static_cast<std::size_t>(var)] = x;
            collect(var + 1, budget - x, e);
        }
        e[static_cast<std::size_t>(var)] = 0;
    }

    int k_;
    std::uint32_t D_;
    std::uint64_t base_;
    std::vector<ExponentVector> vectors_;  // lex sorted
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> degrees_;
    std::vector<std::int32_t> lookup_;
};

using Dense = std::vector<std::int64_t>;

void add_into(Dense& dst, const Dense& src)
{
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (__builtin_add_overflow(dst[i], src[i], &dst[i]))
            throw std::overflow_error("chain enumeration count overflow");
}

// dst = q^{e} * src, truncated.
void shift_into(Dense& dst, const Dense& src, const MonomialIndex& idx, std::uint64_t ekey, std::uint32_t edeg)
{
    std::fill(dst.begin(), dst.end(), 0);
    const std::uint32_t D = idx.max_degree();
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == 0 || idx.degree(i) + edeg > D)
            continue;
        dst[idx.index_of_key(idx.key(i) + ekey)] = src[i];
    }
}

QPoly chain_enumerate(const DescentSet& R, int n, Truncation t)
{
    if (R.n() != n)
        throw std::invalid_argument("chain enumeration: R is not a subset of {1..n-1}");
    const MonomialIndex idx(t);
    const std::size_t M = idx.size();

    // Positions 1..n; G[i] accumulates sum_{q >= p} F_i[q].
    std::vector<Dense> G(static_cast<std::size_t>(n) + 1, Dense(M, 0));
    std::vector<Dense> F(static_cast<std::size_t>(n) + 1, Dense(M, 0));

    for (std::size_t p = M; p-- > 0;) {
        // The chain vector s = idx.vector(p) contributes q^{reverse(s)}.
        const ExponentVector& s = idx.vector(p);
        const ExponentVector e(s.rbegin(), s.rend());
        const std::uint64_t ekey = idx.pack(e);
        const std::uint32_t edeg = idx.degree(p);

        auto& top = F[static_cast<std::size_t>(n)];
        std::fill(top.begin(), top.end(), 0);
        top[idx.index_of_key(ekey)] = 1;

        for (int i = n - 1; i >= 1; --i) {
            const auto ui = static_cast<std::size_t>(i);
            const bool strict = R.contains(i);
            if (!strict)
                add_into(G[ui + 1], F[ui + 1]);
            shift_into(F[ui], G[ui + 1], idx, ekey, edeg);
            if (strict)
                add_into(G[ui + 1], F[ui + 1]);
        }
        add_into(G[1], F[1]);
    }

    QPoly out(t);
    for (std::size_t i = 0; i < M; ++i)
        if (G[1][i] != 0)
            out.add_term(idx.vector(i), mpz_class(static_cast<long>(G[1][i])));
    return out;
}

}  // namespace

QPoly fundamental_principal_enum(const DescentSet& R, int n, int k, Truncation t)
{
    if (t.k != k)
        throw std::invalid_argument("fundamental_principal_enum: truncation has the wrong k");
    return chain_enumerate(R, n, t);
}

QPoly schur_principal_tableaux(const Partition& lambda, int k, Truncation t)
{
    if (t.k != k)
        throw std::invalid_argument("schur_principal_tableaux: truncation has the wrong k");
    std::map<std::uint64_t, QPoly> by_descent_set;
    QPoly out(t);
    for (const auto& T : enumerate_syt(lambda)) {
        const DescentSet R = des(T);
        auto it = by_descent_set.find(R.mask());
        if (it == by_descent_set.end())
            it = by_descent_set.emplace(R.mask(), chain_enumerate(R, lambda.size(), t)).first;
        out += it->second;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Character oracle

QPoly harmonics_multiplicity_character(const Partition& lambda, int k, Truncation t)
{
    const int n = lambda.size();
    if (t.k != 1)
        throw std::invalid_argument("harmonics_multiplicity_character: single-variable truncation required");
    if (t.degree < exact_degree_bound(n, k))
        throw std::invalid_argument("harmonics_multiplicity_character: D below k*n(n-1)/2");
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");

    std::vector<mpq_class> acc(static_cast<std::size_t>(t.degree) + 1, 0);
    const QPoly poch = pochhammer_qq(1, n, t);
    for (const auto& mu : partitions_of(n)) {
        const std::int64_t chi = mn_character(lambda, mu);
        if (chi == 0)
            continue;
        QPoly graded_trace = poch;
        for (int part : mu.parts())
            graded_trace *= p_principal(part, t);
        QPoly power = QPoly::one(t);
        for (int i = 0; i < k; ++i)
            power *= graded_trace;

        mpq_class scale(mpz_class(static_cast<long>(chi)), centralizer_size(mu));
        scale.canonicalize();
        for (const auto& [e, c] : power.terms())
            acc[e[0]] += scale * mpq_class(c);
    }

    QPoly out(t);
    for (std::size_t d = 0; d < acc.size(); ++d) {
        if (acc[d].get_den() != 1)
            throw std::logic_error("character oracle produced a non-integral coefficient " + acc[d].get_str() +
                                   " at degree " + std::to_string(d));
        out.add_term({static_cast<std::uint32_t>(d)}, acc[d].get_num());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

class ReportBuilder {
public:
    ReportBuilder(std::string identity, nlohmann::json params)
        : start_(std::chrono::steady_clock::now())
    {
        report_.identity = std::move(identity);
        report_.params = std::move(params);
    }

    void record_digest(const std::string& side, const QPoly& p)
    {
        for (const auto& [name, d] : report_.digests)
            if (name == side)
                return;
        report_.digests.emplace_back(side, digest(p));
    }

    bool compare(const std::string& check, const std::string& left_name, const QPoly& left,
                 const std::string& right_name, const QPoly& right, const nlohmann::json& instance = nullptr,
                 bool keep_digests = true)
    {
        if (keep_digests) {
            record_digest(left_name, left);
            record_digest(right_name, right);
        }
        const auto diff = first_difference(left, right);
        if (!diff) {
            if (keep_digests)
                report_.checks.push_back(check);
            return true;
        }
        fail_with(Counterexample{check, left_name, right_name, diff->exponent, diff->left.get_str(),
                                 diff->right.get_str(), instance});
        return false;
    }

    void require(bool ok, const std::string& check, const std::string& failure)
    {
        if (ok) {
            report_.checks.push_back(check);
        } else if (report_.passed) {
            report_.passed = false;
            report_.failure = failure;
        }
    }

    void note(const std::string& check) { report_.checks.push_back(check); }

    void fail_with(Counterexample cx)
    {
        if (!report_.passed)
            return;
        report_.passed = false;
        report_.counterexample = std::move(cx);
    }

    bool passed() const noexcept { return report_.passed; }

    VerificationReport finish()
    {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        report_.elapsed_ms = std::chrono::duration<double, std::milli>(elapsed).count();
        return std::move(report_);
    }

private:
    VerificationReport report_;
    std::chrono::steady_clock::time_point start_;
};

void require_degree(const Truncation& t, int bound, const char* op)
{
    if (t.degree < bound)
        throw std::invalid_argument(std::string(op) + ": D below the exact degree bound k*n(n-1)/2");
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r, bool include_timing)
{
    nlohmann::json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["status"] = r.passed ? "pass" : "fail";
    nlohmann::json digests = nlohmann::json::object();
    for (const auto& [side, d] : r.digests)
        digests[side] = d;
    j["digests"] = std::move(digests);
    j["checks"] = r.checks;
    if (r.counterexample) {
        const auto& cx = *r.counterexample;
        j["counterexample"] = {{"check", cx.check},        {"left", cx.left_side},
                               {"right", cx.right_side},   {"exponent", cx.exponent},
                               {"left_coeff", cx.left_coeff}, {"right_coeff", cx.right_coeff},
                               {"instance", cx.instance}};
    } else {
        j["counterexample"] = nullptr;
    }
    if (!r.failure.empty())
        j["failure"] = r.failure;
    if (include_timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

VerificationReport verify_theorem_finite(const Partition& lambda, int k, Truncation t, unsigned jobs)
{
    const int n = lambda.size();
    if (t.k != k)
        throw std::invalid_argument("verify_theorem_finite: truncation has the wrong k");
    require_degree(t, exact_degree_bound(n, k), "verify_theorem_finite");
    ReportBuilder rb("finite", {{"lambda", to_string(lambda)}, {"k", k}, {"D", t.degree}});

    const QPoly jt = schur_principal_jt(lambda, t);
    const QPoly normalized = pochhammer_product(n, t) * jt;
    const QPoly comaj_side = exact_at_degree(schur_comaj_formula(lambda, k, jobs), t.degree);
    const QPoly tableaux_side = exact_at_degree(tableaux_weight_sum(lambda, k, jobs), t.degree);
    const QPoly ssyt = schur_principal_tableaux(lambda, k, t);

    rb.compare("pochhammer*jacobi_trudi == comaj_formula", "pochhammer*jacobi_trudi", normalized,
               "comaj_formula", comaj_side);
    rb.compare("pochhammer*jacobi_trudi == labeled_tableaux_sum", "pochhammer*jacobi_trudi", normalized,
               "labeled_tableaux_sum", tableaux_side);
    rb.compare("jacobi_trudi == ssyt_enumeration", "jacobi_trudi", jt, "ssyt_enumeration", ssyt);
    return rb.finish();
}

VerificationReport verify_theorem_kronecker(const Partition& lambda, int k, unsigned jobs)
{
    const int n = lambda.size();
    const int bound = exact_degree_bound(n, k);
    ReportBuilder rb("kronecker", {{"lambda", to_string(lambda)}, {"k", k}});

    const QPoly comaj_side = harmonics_multiplicity_comaj(lambda, k, jobs);
    const QPoly character_side = harmonics_multiplicity_character(lambda, k, Truncation(1, bound));
    rb.compare("comaj_path == character_path", "comaj_path", comaj_side, "character_path", character_side);

    mpz_class expected = syt_count(lambda);
    for (int i = 1; i < k; ++i)
        expected *= factorial(n);
    const mpz_class at_one = comaj_side.coefficient_sum();
    rb.require(at_one == expected, "value at q=1 == f^lambda (n!)^(k-1) = " + expected.get_str(),
               "value at q=1 is " + at_one.get_str() + ", expected " + expected.get_str());
    return rb.finish();
}

VerificationReport verify_quasi(const DescentSet& R, int n, int k, Truncation t, unsigned jobs)
{
    if (t.k != k)
        throw std::invalid_argument("verify_quasi: truncation has the wrong k");
    if (R.n() != n)
        throw std::invalid_argument("verify_quasi: R is not a subset of {1..n-1}");
    ReportBuilder rb("quasi", {{"R", to_string(R)}, {"n", n}, {"k", k}, {"D", t.degree}});

    const QPoly normalized = pochhammer_product(n, t) * fundamental_principal_enum(R, n, k, t);
    const QPoly comaj_side = exact_at_degree(fundamental_comaj_formula(R, n, k, jobs), t.degree);
    rb.compare("pochhammer*fundamental_enumeration == comaj_formula", "pochhammer*fundamental_enumeration",
               normalized, "comaj_formula", comaj_side);
    return rb.finish();
}

VerificationReport verify_row_case(int n, int k, unsigned jobs)
{
    ReportBuilder rb("row", {{"n", n}, {"k", k}});
    const Partition row({n});

    const QPoly comaj_side = schur_comaj_formula(row, k, jobs);
    const QPoly product_side = row_case_product_sum(n, k, jobs);
    rb.compare("comaj_formula((n),k) == product_identity_sum", "comaj_formula", comaj_side,
               "product_identity_sum", product_side);

    if (k == 2)
        rb.compare("comaj_formula((n),2) == inverse_pair_sum", "comaj_formula", comaj_side, "inverse_pair_sum",
                   inverse_pair_sum(n));

    const QPoly hilbert = collapse_to_single_variable(product_side);
    const QPoly invariants =
        harmonics_multiplicity_character(row, k, Truncation(1, exact_degree_bound(n, k)));
    rb.compare("collapsed product_identity_sum == invariant Hilbert series (character oracle)",
               "collapsed_product_identity_sum", hilbert, "character_invariants", invariants);
    return rb.finish();
}

namespace {

// Every S in (N^r)^n with total degree <= max_degree.
template <class Fn>
void enumerate_lists(int n, int r, int max_degree, Fn&& fn)
{
    SeqList S(n, r);
    const int cells = n * r;
    auto rec = [&](auto&& self, int cell, int budget) -> void {
        if (cell == cells) {
            fn(static_cast<const SeqList&>(S));
            return;
        }
        const int i = cell / r + 1;
        const int c = cell % r + 1;
        for (int x = 0; x <= budget; ++x) {
            S.at(i, c) = static_cast<Entry>(x);
            self(self, cell + 1, budget - x);
        }
        S.at(i, c) = 0;
    };
    rec(rec, 0, max_degree);
}

struct Prop41Sides {
    QPoly left;
    QPoly right;
};

Prop41Sides prop41_sides(const DescentSet& R, const DescentSet& D_target, const Permutation& sigma, int r,
                         int bound)
{
    const int n = sigma.size();
    if (r < 1)
        throw std::invalid_argument("verify_prop41: r must be at least 1");
    if (bound < 0)
        throw std::invalid_argument("verify_prop41: bound must be nonnegative");
    if (R.n() != n || D_target.n() != n)
        throw std::invalid_argument("verify_prop41: R and D must be subsets of {1..n-1}");

    // Entries are bounded by the total degree, so truncating at D = bound
    // keeps every compared coefficient exact.
    const Truncation t(r, bound);

    QPoly peeled(t);
    enumerate_lists(n, r, bound, [&](const SeqList& Z) {
        if (reading_order(R, Z) == sigma && gen_des(R, Z.drop_leading(1), sigma) == D_target)
            peeled.add_term(weight(Z, r), 1);
    });

    QPoly right(t);
    const auto shift = static_cast<std::uint32_t>(D_target.comaj_weight());
    enumerate_lists(n, r - 1, bound, [&](const SeqList& S) {
        if (gen_des(R, S, sigma) == D_target) {
            ExponentVector e = weight(S, r);
            e[static_cast<std::size_t>(r - 1)] += shift;
            right.add_term(e, 1);
        }
    });
    return {pochhammer_qq(r, n, t) * peeled, std::move(right)};
}

}  // namespace

VerificationReport verify_prop41(const DescentSet& R, const DescentSet& D_target, const Permutation& sigma, int r,
                                 int bound)
{
    ReportBuilder rb("prop41", {{"R", to_string(R)},
                                {"D", to_string(D_target)},
                                {"sigma", to_string(sigma)},
                                {"r", r},
                                {"bound", bound}});
    const auto sides = prop41_sides(R, D_target, sigma, r, bound);
    rb.compare("(q_r;q_r)_n * peeled_sum == q_r^c(D) * shorter_sum", "pochhammer*peeled_sum", sides.left,
               "shifted_shorter_sum", sides.right);
    return rb.finish();
}

VerificationReport verify_prop41_sweep(int n, int r, int bound)
{
    ReportBuilder rb("prop41", {{"n", n}, {"r", r}, {"bound", bound}});
    std::size_t instances = 0;
    std::size_t achievable = 0;
    for (const auto& R : all_subsets(n)) {
        for (const auto& sigma : all_permutations(n)) {
            for (const auto& D : all_subsets(n)) {
                const auto sides = prop41_sides(R, D, sigma, r, bound);
                ++instances;
                if (!sides.right.is_zero())
                    ++achievable;
                const nlohmann::json instance = {{"R", to_string(R)}, {"D", to_string(D)}, {"sigma", to_string(sigma)}};
                rb.compare("(q_r;q_r)_n * peeled_sum == q_r^c(D) * shorter_sum", "pochhammer*peeled_sum",
                           sides.left, "shifted_shorter_sum", sides.right, instance, false);
                if (!rb.passed())
                    return rb.finish();
            }
        }
    }
    rb.note("(q_r;q_r)_n * peeled_sum == q_r^c(D) * shorter_sum on " + std::to_string(instances) +
            " instances, " + std::to_string(achievable) + " with achievable D");
    return rb.finish();
}

VerificationReport verify_infinite_reindex(const Partition& lambda, int m, unsigned jobs)
{
    if (m < 1)
        throw std::invalid_argument("verify_infinite_reindex: m must be at least 1");
    ReportBuilder rb("reindex", {{"lambda", to_string(lambda)}, {"m", m}});
    const int n = lambda.size();

    // Q-convention: coordinate i of the final chain pairs with q_i.
    const QPoly finite = schur_comaj_formula(lambda, m, jobs);
    const QPoly left = extend_variables(reverse_variables(finite), m + 1);

    const QPoly longer = reverse_variables(schur_comaj_formula(lambda, m + 1, jobs));
    const QPoly right = set_variable_zero(longer, m + 1).restrict_degree(exact_degree_bound(n, m));

    rb.compare("Q-weights at k=m == Q-weights at k=m+1 with q_(m+1)=0", "reversed_k=m", left,
               "reversed_k=m+1_at_q_(m+1)=0", right);
    return rb.finish();
}

}  // namespace comaj
