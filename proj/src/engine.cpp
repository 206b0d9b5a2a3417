#include "comaj/engine.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace comaj {

// ---------------------------------------------------------------------------
// SeqList

SeqList::SeqList(int n, int r) : n_(n), r_(r)
{
    if (n < 0 || r < 0)
        throw std::invalid_argument("SeqList: negative size");
    data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(r), 0);
}

SeqList::SeqList(const std::vector<std::vector<Entry>>& seqs)
    : n_(static_cast<int>(seqs.size())), r_(seqs.empty() ? 0 : static_cast<int>(seqs.front().size()))
{
    data_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(r_));
    for (const auto& s : seqs) {
        if (static_cast<int>(s.size()) != r_)
            throw std::invalid_argument("SeqList: sequences must share one length");
        data_.insert(data_.end(), s.begin(), s.end());
    }
}

SeqList SeqList::drop_leading(int count) const
{
    if (count < 0 || count > r_)
        throw std::invalid_argument("SeqList::drop_leading: count out of range");
    SeqList out(n_, r_ - count);
    for (int i = 1; i <= n_; ++i)
        for (int c = 1; c <= out.r_; ++c)
            out.at(i, c) = at(i, c + count);
    return out;
}

std::uint64_t SeqList::coordinate_sum(int c) const noexcept
{
    std::uint64_t total = 0;
    for (int i = 1; i <= n_; ++i)
        total += at(i, c);
    return total;
}

std::string to_string(const SeqList& s)
{
    const bool digits = std::all_of(s.raw().begin(), s.raw().end(), [](Entry x) { return x < 10; });
    std::ostringstream os;
    os << '(';
    for (int i = 1; i <= s.n(); ++i) {
        if (i > 1)
            os << ',';
        if (s.r() == 0) {
            os << "()";
            continue;
        }
        if (!digits)
            os << '[';
        for (int c = 1; c <= s.r(); ++c) {
            if (!digits && c > 1)
                os << '.';
            os << s.at(i, c);
        }
        if (!digits)
            os << ']';
    }
    os << ')';
    return os.str();
}

PermVector::PermVector(int n, std::vector<Permutation> perms) : n_(n), perms_(std::move(perms))
{
    for (const auto& p : perms_)
        if (p.size() != n_)
            throw std::invalid_argument("PermVector: every permutation must lie in S_n");
}

// ---------------------------------------------------------------------------
// Comparisons

std::strong_ordering lex_cmp(std::span<const Entry> a, std::span<const Entry> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("lex_cmp: sequences of different lengths");
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// Maximal R-runs are the classes of ~_R. run_id(v) counts the j < v outside R.
int run_id(std::uint64_t mask, int v) noexcept
{
    const std::uint64_t below = (v >= 64) ? ~0ULL : ((1ULL << v) - 1);
    return (v - 1) - std::popcount(mask & below & ~1ULL);
}

bool same_run(std::uint64_t mask, int a, int b) noexcept
{
    if (a > b)
        std::swap(a, b);
    if (a == b)
        return true;
    // bits a..b-1 all set
    const std::uint64_t width = static_cast<std::uint64_t>(b - a);
    const std::uint64_t span = (width >= 64 ? ~0ULL : ((1ULL << width) - 1)) << a;
    return (mask & span) == span;
}

void require_n(const DescentSet& R, int n, const char* op)
{
    if (R.n() != n)
        throw std::invalid_argument(std::string(op) + ": R and the list have different n");
}

// Descent bitmask of Des_{R,S}(sigma); bit i <=> i is a descent.
std::uint64_t descent_mask(const DescentSet& R, const SeqList& S, const Permutation& sigma)
{
    const int n = S.n();
    const int r = S.r();
    const std::uint64_t rmask = R.mask();
    std::uint64_t out = 0;
    for (int i = 1; i < n; ++i) {
        const int a = sigma(i);
        const int b = sigma(i + 1);
        auto cmp = std::strong_ordering::equal;
        if (r > 0) {
            const auto sa = S.seq(a);
            const auto sb = S.seq(b);
            cmp = std::lexicographical_compare_three_way(sa.begin(), sa.end(), sb.begin(), sb.end());
        }
        bool descent = false;
        if (cmp > 0) {
            descent = true;
        } else if (cmp == 0) {
            const bool nb = same_run(rmask, a, b);
            descent = (b < a && !nb) || (b > a && nb);
        }
        if (descent)
            out |= (1ULL << i);
    }
    return out;
}

std::int64_t mask_comaj(std::uint64_t mask, int n) noexcept
{
    std::int64_t total = 0;
    for (int i = 1; i < n; ++i)
        if ((mask >> i) & 1U)
            total += n - i;
    return total;
}

void check_gen_args(const DescentSet& R, const SeqList& S, const Permutation& sigma, const char* op)
{
    if (S.n() != sigma.size())
        throw std::invalid_argument(std::string(op) + ": |S| != n");
    require_n(R, sigma.size(), op);
}

SeqList z_step_masked(const SeqList& S, const Permutation& sigma, std::uint64_t mask)
{
    const int n = S.n();
    const int r = S.r();
    SeqList Z(n, r + 1);
    Entry label = 0;
    for (int i = 1; i <= n; ++i) {
        const int v = sigma(i);
        Z.at(v, 1) = label;
        const auto src = S.seq(v);
        for (int c = 0; c < r; ++c)
            Z.at(v, c + 2) = src[static_cast<std::size_t>(c)];
        if ((mask >> i) & 1U)
            ++label;
    }
    return Z;
}

}  // namespace

bool r_neighbors(const DescentSet& R, int i, int j)
{
    const int n = R.n();
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("r_neighbors: index out of range");
    return same_run(R.mask(), i, j);
}

DescentSet gen_des(const DescentSet& R, const SeqList& S, const Permutation& sigma)
{
    check_gen_args(R, S, sigma, "gen_des");
    return DescentSet::from_mask(sigma.size(), descent_mask(R, S, sigma));
}

std::int64_t gen_comaj(const DescentSet& R, const SeqList& S, const Permutation& sigma)
{
    check_gen_args(R, S, sigma, "gen_comaj");
    return mask_comaj(descent_mask(R, S, sigma), sigma.size());
}

SeqList z_step(const DescentSet& R, const Permutation& sigma, const SeqList& S)
{
    check_gen_args(R, S, sigma, "z_step");
    return z_step_masked(S, sigma, descent_mask(R, S, sigma));
}

SeqList z_chain(const DescentSet& R, const PermVector& sigmas, bool append_identity)
{
    SeqList Z = SeqList::empty(sigmas.n());
    for (const auto& sigma : sigmas.perms())
        Z = z_step(R, sigma, Z);
    if (append_identity)
        Z = z_step(R, Permutation::identity(sigmas.n()), Z);
    return Z;
}

std::vector<std::int64_t> comaj_components(const DescentSet& R, const PermVector& sigmas)
{
    const int n = sigmas.n();
    require_n(R, n, "comaj_components");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(sigmas.k()));
    SeqList Z = SeqList::empty(n);
    const Permutation id = Permutation::identity(n);
    for (int i = 1; i <= sigmas.k(); ++i) {
        const Permutation& sigma = i < sigmas.k() ? sigmas.perms()[static_cast<std::size_t>(i - 1)] : id;
        const std::uint64_t mask = descent_mask(R, Z, sigma);
        out.push_back(mask_comaj(mask, n));
        if (i < sigmas.k())
            Z = z_step_masked(Z, sigma, mask);
    }
    return out;
}

std::vector<std::int64_t> comaj_components(const StandardTableau& T, const PermVector& sigmas)
{
    if (T.size() != sigmas.n())
        throw std::invalid_argument("comaj_components: tableau size != n");
    return comaj_components(des(T), sigmas);
}

std::int64_t comaj_total(const StandardTableau& T, const PermVector& sigmas)
{
    const auto parts = comaj_components(T, sigmas);
    return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

Permutation reading_order(const DescentSet& R, const SeqList& S)
{
    const int n = S.n();
    require_n(R, n, "reading_order");
    const std::uint64_t rmask = R.mask();
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 1);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        const auto c = lex_cmp(S.seq(i), S.seq(j));
        if (c != 0)
            return c < 0;
        const int ri = run_id(rmask, i);
        const int rj = run_id(rmask, j);
        if (ri != rj)
            return ri < rj;
        return i > j;
    });
    return Permutation(std::move(idx));
}

SeqList phi(const DescentSet& R, const Permutation& sigma, int i, const SeqList& S)
{
    const int n = S.n();
    if (sigma.size() != n)
        throw std::invalid_argument("phi: |sigma| != n");
    if (S.r() < 1)
        throw std::invalid_argument("phi: sequences need at least one coordinate");
    if (i < 0 || i > n - 1)
        throw std::invalid_argument("phi: i must lie in [0, n-1]");
    require_n(R, n, "phi");
#ifdef COMAJ_VALIDATE_PRECONDITIONS
    if (reading_order(R, S) != sigma)
        throw std::invalid_argument("phi: sigma is not the reading order of S");
#endif
    SeqList out = S;
    for (int j = i + 1; j <= n; ++j)
        ++out.at(sigma(j), 1);
    return out;
}

Permutation tau_r(const DescentSet& R, int n)
{
    require_n(R, n, "tau_r");
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    int start = 1;
    while (start <= n) {
        int end = start;
        while (end < n && R.contains(end))
            ++end;
        for (int v = end; v >= start; --v)
            word.push_back(v);
        start = end + 1;
    }
    return Permutation(std::move(word));
}

ExponentVector weight(const SeqList& S, int k)
{
    const int r = S.r();
    if (r > k)
        throw std::invalid_argument("weight: more coordinates than variables");
    ExponentVector e(static_cast<std::size_t>(k), 0);
    for (int i = 1; i <= r; ++i)
        e[static_cast<std::size_t>(i - 1)] = static_cast<std::uint32_t>(S.coordinate_sum(r - i + 1));
    return e;
}

std::span<const Entry> LabeledTableau::cell(int row, int col) const
{
    return filling.seq(base.rows().at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col)));
}

LabeledTableau labeled_tableau(const StandardTableau& T, const PermVector& sigmas)
{
    if (T.size() != sigmas.n())
        throw std::invalid_argument("labeled_tableau: tableau size != n");
    return LabeledTableau{T.shape(), T, z_chain(des(T), sigmas, true)};
}

}  // namespace comaj
