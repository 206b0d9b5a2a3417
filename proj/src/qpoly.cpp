#include "comaj/qpoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace comaj {

std::uint64_t total_degree(const ExponentVector& e) noexcept
{
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const noexcept
{
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

Truncation::Truncation(int k_, int degree_) : k(k_), degree(degree_)
{
    if (k < 1 || degree < 0)
        throw std::invalid_argument("truncation requires k >= 1 and D >= 0");
}

// ---------------------------------------------------------------------------

QPoly QPoly::one(Truncation t)
{
    return monomial(t, ExponentVector(static_cast<std::size_t>(t.k), 0));
}

QPoly QPoly::monomial(Truncation t, const ExponentVector& e, const mpz_class& c)
{
    QPoly p(t);
    p.add_term(e, c);
    return p;
}

QPoly QPoly::variable(Truncation t, int var)
{
    if (var < 1 || var > t.k)
        throw std::invalid_argument("variable index out of range");
    ExponentVector e(static_cast<std::size_t>(t.k), 0);
    e[static_cast<std::size_t>(var - 1)] = 1;
    return monomial(t, e);
}

mpz_class QPoly::coeff(const ExponentVector& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void QPoly::add_term(const ExponentVector& e, const mpz_class& c)
{
    if (e.size() != static_cast<std::size_t>(trunc_.k))
        throw std::invalid_argument("exponent vector length does not match k");
    if (c == 0 || total_degree(e) > static_cast<std::uint64_t>(trunc_.degree))
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

QPoly QPoly::restrict_degree(int degree) const
{
    if (degree > trunc_.degree)
        throw std::invalid_argument("restrict_degree cannot raise the truncation bound");
    QPoly out(Truncation(trunc_.k, degree));
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= static_cast<std::uint64_t>(degree))
            out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

void QPoly::require_same(const QPoly& other, const char* op) const
{
    if (!(trunc_ == other.trunc_))
        throw std::invalid_argument(std::string(op) + ": operands have different (k, D)");
}

QPoly& QPoly::operator+=(const QPoly& other)
{
    require_same(other, "add");
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other)
{
    require_same(other, "sub");
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

QPoly& QPoly::operator*=(const mpz_class& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

QPoly QPoly::operator-() const
{
    QPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

namespace {

// Exponent vectors of degree <= D pack into base (D+1) digits without carries
// under addition as long as the sum still has degree <= D.
struct Packing {
    std::uint64_t base = 0;
    std::uint64_t span = 0;  // base^k
    bool fits = false;
};

Packing packing_for(Truncation t)
{
    Packing pk;
    pk.base = static_cast<std::uint64_t>(t.degree) + 1;
    unsigned __int128 span = 1;
    for (int i = 0; i < t.k; ++i) {
        span *= pk.base;
        if (span > (static_cast<unsigned __int128>(1) << 62))
            return pk;
    }
    pk.span = static_cast<std::uint64_t>(span);
    pk.fits = true;
    return pk;
}

std::uint64_t pack(const ExponentVector& e, std::uint64_t base)
{
    std::uint64_t key = 0;
    for (auto it = e.rbegin(); it != e.rend(); ++it)
        key = key * base + *it;
    return key;
}

ExponentVector unpack(std::uint64_t key, std::uint64_t base, int k)
{
    ExponentVector e(static_cast<std::size_t>(k));
    for (auto& x : e) {
        x = static_cast<std::uint32_t>(key % base);
        key /= base;
    }
    return e;
}

struct PackedTerm {
    std::uint64_t key;
    std::uint64_t degree;
    const mpz_class* coeff;
};

std::vector<PackedTerm> packed_terms(const QPoly::Terms& terms, std::uint64_t base)
{
    std::vector<PackedTerm> out;
    out.reserve(terms.size());
    for (const auto& [e, c] : terms)
        out.push_back({pack(e, base), total_degree(e), &c});
    return out;
}

constexpr std::uint64_t dense_limit = 1ULL << 20;

}  // namespace

QPoly operator*(const QPoly& a, const QPoly& b)
{
    a.require_same(b, "mul");
    const Truncation t = a.trunc_;
    QPoly out(t);
    if (a.terms_.empty() || b.terms_.empty())
        return out;

    const auto D = static_cast<std::uint64_t>(t.degree);
    const Packing pk = packing_for(t);

    if (pk.fits) {
        const auto ta = packed_terms(a.terms_, pk.base);
        const auto tb = packed_terms(b.terms_, pk.base);
        auto accumulate_into = [&](auto&& sink) {
            for (const auto& x : ta)
                for (const auto& y : tb)
                    if (x.degree + y.degree <= D)
                        mpz_addmul(sink(x.key + y.key).get_mpz_t(), x.coeff->get_mpz_t(),
                                   y.coeff->get_mpz_t());
        };
        if (pk.span <= dense_limit) {
            std::vector<mpz_class> dense(pk.span);
            accumulate_into([&](std::uint64_t key) -> mpz_class& { return dense[key]; });
            for (std::uint64_t key = 0; key < pk.span; ++key)
                if (dense[key] != 0)
                    out.terms_.emplace(unpack(key, pk.base, t.k), std::move(dense[key]));
        } else {
            std::unordered_map<std::uint64_t, mpz_class> sparse;
            accumulate_into([&](std::uint64_t key) -> mpz_class& { return sparse[key]; });
            for (auto& [key, c] : sparse)
                if (c != 0)
                    out.terms_.emplace(unpack(key, pk.base, t.k), std::move(c));
        }
        return out;
    }

    for (const auto& [ea, ca] : a.terms_) {
        const auto da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > D)
                continue;
            ExponentVector e(ea);
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

QPoly& QPoly::operator*=(const QPoly& other)
{
    *this = *this * other;
    return *this;
}

QPoly QPoly::divide_exact(const mpz_class& d) const
{
    if (d == 0)
        throw std::invalid_argument("divide_exact: division by zero");
    QPoly out(trunc_);
    for (const auto& [e, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw std::logic_error("divide_exact: coefficient " + c.get_str() +
                                   " is not divisible by " + d.get_str());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        out.terms_.emplace_hint(out.terms_.end(), e, std::move(q));
    }
    return out;
}

mpz_class QPoly::coefficient_sum() const
{
    mpz_class s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

bool operator==(const QPoly& a, const QPoly& b)
{
    a.require_same(b, "equals");
    return a.terms_ == b.terms_;
}

std::optional<TermMismatch> first_difference(const QPoly& a, const QPoly& b)
{
    if (!(a.truncation() == b.truncation()))
        throw std::invalid_argument("first_difference: operands have different (k, D)");
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const GradedLexLess less;
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && less(ia->first, ib->first)))
            return TermMismatch{ia->first, ia->second, 0};
        if (ia == a.terms().end() || less(ib->first, ia->first))
            return TermMismatch{ib->first, 0, ib->second};
        if (ia->second != ib->second)
            return TermMismatch{ia->first, ia->second, ib->second};
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Series

QPoly geometric_inverse(const QPoly& unit)
{
    const Truncation t = unit.truncation();
    const ExponentVector zero(static_cast<std::size_t>(t.k), 0);
    if (unit.coeff(zero) != 1)
        throw std::invalid_argument("geometric_inverse: constant term must be 1");

    // 1/(1 - v) = 1 + v(1 + v(1 + ...)) with v = 1 - unit having no constant term.
    const QPoly v = QPoly::one(t) - unit;
    QPoly inv = QPoly::one(t);
    if (v.is_zero())
        return inv;
    for (int step = 0; step < t.degree; ++step)
        inv = QPoly::one(t) + v * inv;
    return inv;
}

QPoly pochhammer_qq(int var, int n, Truncation t)
{
    if (var < 1 || var > t.k)
        throw std::invalid_argument("pochhammer_qq: variable index out of range");
    QPoly out = QPoly::one(t);
    ExponentVector e(static_cast<std::size_t>(t.k), 0);
    for (int j = 1; j <= n; ++j) {
        e[static_cast<std::size_t>(var - 1)] = static_cast<std::uint32_t>(j);
        QPoly factor = QPoly::one(t);
        factor.add_term(e, -1);
        out *= factor;
    }
    return out;
}

QPoly pochhammer_product(int n, Truncation t)
{
    QPoly out = QPoly::one(t);
    for (int i = 1; i <= t.k; ++i)
        out *= pochhammer_qq(i, n, t);
    return out;
}

namespace {

void multiples_rec(int var, int r, std::uint64_t budget, ExponentVector& e, QPoly& out)
{
    if (var == static_cast<int>(e.size())) {
        out.add_term(e, 1);
        return;
    }
    for (std::uint64_t x = 0; x <= budget; x += static_cast<std::uint64_t>(r)) {
        e[static_cast<std::size_t>(var)] = static_cast<std::uint32_t>(x);
        multiples_rec(var + 1, r, budget - x, e, out);
    }
    e[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

QPoly p_principal(int r, Truncation t)
{
    if (r < 1)
        throw std::invalid_argument("p_principal: r must be positive");
    QPoly out(t);
    ExponentVector e(static_cast<std::size_t>(t.k), 0);
    multiples_rec(0, r, static_cast<std::uint64_t>(t.degree), e, out);
    return out;
}

std::vector<QPoly> h_principal_upto(int m, Truncation t)
{
    if (m < 0)
        throw std::invalid_argument("h_principal: m must be nonnegative");
    std::vector<QPoly> p;
    p.reserve(static_cast<std::size_t>(m));
    for (int r = 1; r <= m; ++r)
        p.push_back(p_principal(r, t));

    std::vector<QPoly> h;
    h.reserve(static_cast<std::size_t>(m) + 1);
    h.push_back(QPoly::one(t));
    for (int j = 1; j <= m; ++j) {
        QPoly acc(t);
        for (int r = 1; r <= j; ++r)
            acc += p[static_cast<std::size_t>(r - 1)] * h[static_cast<std::size_t>(j - r)];
        h.push_back(acc.divide_exact(j));
    }
    return h;
}

QPoly h_principal(int m, Truncation t) { return h_principal_upto(m, t).back(); }

QPoly schur_principal_jt(const Partition& lambda, Truncation t)
{
    if (lambda.length() == 0)
        throw std::invalid_argument("schur_principal_jt: empty partition");
    const int len = lambda.length();
    const auto h = h_principal_upto(lambda[0] + len - 1, t);
    auto entry = [&](int i, int j) -> const QPoly* {
        const int idx = lambda[i] - i + j;
        if (idx < 0)
            return nullptr;
        return &h[static_cast<std::size_t>(idx)];
    };

    // Laplace expansion along rows, memoized on the set of columns still free:
    // minor[mask] is the determinant of rows (len - popcount(mask))..len-1
    // restricted to the columns in mask.
    std::vector<std::optional<QPoly>> minor(std::size_t{1} << len);
    minor[0] = QPoly::one(t);
    for (std::uint32_t mask = 1; mask < (1U << len); ++mask) {
        const int row = len - std::popcount(mask);
        QPoly acc(t);
        int position = 0;
        for (int col = 0; col < len; ++col) {
            if (((mask >> col) & 1U) == 0)
                continue;
            const QPoly* a = entry(row, col);
            const auto& rest = minor[mask & ~(1U << col)];
            if (a != nullptr && rest && !rest->is_zero()) {
                QPoly term = *a * *rest;
                if (position % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++position;
        }
        minor[mask] = std::move(acc);
    }
    return *minor[(1U << len) - 1];
}

// ---------------------------------------------------------------------------
// Variable manipulation

QPoly collapse_to_single_variable(const QPoly& p)
{
    QPoly out(Truncation(1, p.degree_bound()));
    for (const auto& [e, c] : p.terms())
        out.add_term({static_cast<std::uint32_t>(total_degree(e))}, c);
    return out;
}

QPoly permute_variables(const QPoly& p, const Permutation& perm)
{
    if (perm.size() != p.nvars())
        throw std::invalid_argument("permute_variables: permutation size != k");
    QPoly out(p.truncation());
    for (const auto& [e, c] : p.terms()) {
        ExponentVector f(e.size());
        for (int i = 1; i <= perm.size(); ++i)
            f[static_cast<std::size_t>(perm(i) - 1)] = e[static_cast<std::size_t>(i - 1)];
        out.add_term(f, c);
    }
    return out;
}

QPoly reverse_variables(const QPoly& p)
{
    QPoly out(p.truncation());
    for (const auto& [e, c] : p.terms())
        out.add_term(ExponentVector(e.rbegin(), e.rend()), c);
    return out;
}

QPoly extend_variables(const QPoly& p, int k)
{
    if (k < p.nvars())
        throw std::invalid_argument("extend_variables: cannot drop variables");
    QPoly out(Truncation(k, p.degree_bound()));
    for (const auto& [e, c] : p.terms()) {
        ExponentVector f(e);
        f.resize(static_cast<std::size_t>(k), 0);
        out.add_term(f, c);
    }
    return out;
}

QPoly set_variable_zero(const QPoly& p, int var)
{
    if (var < 1 || var > p.nvars())
        throw std::invalid_argument("set_variable_zero: variable index out of range");
    QPoly out(p.truncation());
    for (const auto& [e, c] : p.terms())
        if (e[static_cast<std::size_t>(var - 1)] == 0)
            out.add_term(e, c);
    return out;
}

std::string to_string(const QPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool constant = total_degree(e) == 0;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0)
                os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (constant || mag != 1) {
            os << mag.get_str();
            if (!constant)
                os << '*';
        }
        bool first_factor = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!first_factor)
                os << '*';
            first_factor = false;
            os << 'q';
            if (p.nvars() > 1)
                os << '_' << (i + 1);
            if (e[i] > 1)
                os << '^' << e[i];
        }
    }
    return os.str();
}

}  // namespace comaj
