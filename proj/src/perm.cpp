#include "comaj/perm.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace comaj {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> word) : word_(std::move(word))
{
    const auto n = word_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : word_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation word is not a bijection on {1..n}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] != static_cast<int>(i + 1))
            return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("compose: permutations of different sizes");
    std::vector<int> w(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i)
        w[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p)
{
    std::vector<int> w(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i)
        w[static_cast<std::size_t>(p(i) - 1)] = i;
    return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::string to_string(const Permutation& p)
{
    std::ostringstream os;
    const bool digits = p.size() <= 9;
    for (int i = 1; i <= p.size(); ++i) {
        if (!digits && i > 1)
            os << ',';
        os << p(i);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

std::string to_string(const Partition& p)
{
    std::ostringstream os;
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0)
            os << ',';
        os << p[i];
    }
    return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

mpz_class factorial(int n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class syt_count(const Partition& shape)
{
    mpz_class hooks = 1;
    for (int i = 0; i < shape.length(); ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            int leg = 0;
            for (int r = i + 1; r < shape.length() && shape[r] > j; ++r)
                ++leg;
            hooks *= (shape[i] - j - 1) + leg + 1;
        }
    }
    return factorial(shape.size()) / hooks;
}

mpz_class centralizer_size(const Partition& mu)
{
    mpz_class z = 1;
    std::map<int, int> mult;
    for (int part : mu.parts()) {
        z *= part;
        ++mult[part];
    }
    for (const auto& [part, m] : mult)
        z *= factorial(m);
    return z;
}

// ---------------------------------------------------------------------------
// DescentSet

DescentSet::DescentSet(int n) : n_(n)
{
    if (n < 0 || n > max_size)
        throw std::invalid_argument("descent set ambient size out of range");
}

DescentSet::DescentSet(int n, std::span<const int> elems) : DescentSet(n)
{
    for (int i : elems)
        insert(i);
}

DescentSet DescentSet::from_mask(int n, std::uint64_t mask)
{
    DescentSet d(n);
    const std::uint64_t allowed = n <= 1 ? 0 : (((n >= 64) ? ~0ULL : ((1ULL << n) - 1)) & ~1ULL);
    if ((mask & ~allowed) != 0)
        throw std::invalid_argument("descent set mask has elements outside [1, n-1]");
    d.mask_ = mask;
    return d;
}

DescentSet DescentSet::full(int n)
{
    DescentSet d(n);
    for (int i = 1; i < n; ++i)
        d.insert(i);
    return d;
}

void DescentSet::insert(int i)
{
    if (i < 1 || i > n_ - 1)
        throw std::invalid_argument("descent set element outside [1, n-1]");
    mask_ |= (1ULL << i);
}

int DescentSet::count() const noexcept { return std::popcount(mask_); }

std::vector<int> DescentSet::elems() const
{
    std::vector<int> out;
    for (int i = 1; i < n_; ++i)
        if (contains(i))
            out.push_back(i);
    return out;
}

std::int64_t DescentSet::comaj_weight() const noexcept
{
    std::int64_t total = 0;
    for (int i = 1; i < n_; ++i)
        if (contains(i))
            total += n_ - i;
    return total;
}

std::string to_string(const DescentSet& d)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : d.elems()) {
        if (!first)
            os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

std::vector<DescentSet> all_subsets(int n)
{
    std::vector<DescentSet> out;
    const int bits = std::max(n - 1, 0);
    for (std::uint64_t m = 0; m < (1ULL << bits); ++m)
        out.push_back(DescentSet::from_mask(n, m << 1));
    return out;
}

// ---------------------------------------------------------------------------
// StandardTableau

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
{
    std::vector<int> parts;
    for (const auto& row : rows_)
        parts.push_back(static_cast<int>(row.size()));
    shape_ = Partition(parts);  // rejects empty rows and non-partition shapes

    const int n = shape_.size();
    row_of_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            const int v = rows_[r][c];
            if (v < 1 || v > n || row_of_[static_cast<std::size_t>(v - 1)] != -1)
                throw std::invalid_argument("tableau entries must be 1..n, each exactly once");
            row_of_[static_cast<std::size_t>(v - 1)] = static_cast<int>(r);
            if (c > 0 && rows_[r][c - 1] >= v)
                throw std::invalid_argument("tableau rows must increase left to right");
            if (r > 0 && rows_[r - 1][c] >= v)
                throw std::invalid_argument("tableau columns must increase bottom to top");
        }
    }
}

std::vector<int> StandardTableau::reading_word() const
{
    std::vector<int> w;
    for (const auto& row : rows_)
        w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::string to_string(const StandardTableau& t)
{
    std::ostringstream os;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r > 0)
            os << '/';
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c > 0)
                os << ',';
            os << t.rows()[r][c];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Statistics

DescentSet des(const Permutation& p)
{
    DescentSet d(p.size());
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1))
            d.insert(i);
    return d;
}

std::int64_t comaj(const Permutation& p) { return des(p).comaj_weight(); }

DescentSet des(const StandardTableau& t)
{
    DescentSet d(t.size());
    for (int i = 1; i < t.size(); ++i)
        if (t.row_of(i + 1) > t.row_of(i))
            d.insert(i);
    return d;
}

std::int64_t comaj(const StandardTableau& t) { return des(t).comaj_weight(); }

namespace {

// Places n, n-1, ..., 1 by removing corners; each removal sequence is one SYT.
void syt_rec(std::vector<std::vector<int>>& rows, std::vector<int>& lengths, int next,
             std::vector<StandardTableau>& out)
{
    if (next == 0) {
        out.emplace_back(rows);
        return;
    }
    for (std::size_t r = 0; r < lengths.size(); ++r) {
        const int len = lengths[r];
        if (len == 0)
            continue;
        const bool corner = (r + 1 == lengths.size()) || lengths[r + 1] < len;
        if (!corner)
            continue;
        rows[r][static_cast<std::size_t>(len - 1)] = next;
        --lengths[r];
        syt_rec(rows, lengths, next - 1, out);
        ++lengths[r];
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape)
{
    if (shape.length() == 0)
        throw std::invalid_argument("enumerate_syt: empty shape");
    std::vector<std::vector<int>> rows;
    std::vector<int> lengths;
    for (int part : shape.parts()) {
        rows.emplace_back(static_cast<std::size_t>(part), 0);
        lengths.push_back(part);
    }
    std::vector<StandardTableau> out;
    syt_rec(rows, lengths, shape.size(), out);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

Partition cycle_type(const Permutation& p)
{
    std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1, false);
    std::vector<int> lengths;
    for (int start = 1; start <= p.size(); ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        int len = 0;
        for (int v = start; !seen[static_cast<std::size_t>(v)]; v = p(v)) {
            seen[static_cast<std::size_t>(v)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(lengths);
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a
// bead from position b to an empty position b - r; the sign is the parity of
// the beads jumped over.
class MnEvaluator {
public:
    explicit MnEvaluator(const Partition& mu) : mu_(mu.parts().begin(), mu.parts().end()) {}

    std::int64_t eval(std::vector<int> beads, std::size_t part)
    {
        if (part == mu_.size())
            return 1;
        auto key = std::make_pair(beads, part);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        const int r = mu_[part];
        std::int64_t total = 0;
        for (std::size_t idx = 0; idx < beads.size(); ++idx) {
            const int b = beads[idx];
            const int target = b - r;
            if (target < 0 || std::binary_search(beads.begin(), beads.end(), target))
                continue;
            int jumped = 0;
            for (int x : beads)
                if (x > target && x < b)
                    ++jumped;
            std::vector<int> next = beads;
            next[idx] = target;
            std::sort(next.begin(), next.end());
            const std::int64_t sub = eval(std::move(next), part + 1);
            total += (jumped % 2 == 0) ? sub : -sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::vector<int> mu_;
    std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo_;
};

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("mn_character: |lambda| != |mu|");
    const int len = lambda.length();
    std::vector<int> beads;
    for (int i = 0; i < len; ++i)
        beads.push_back(lambda[i] + (len - 1 - i));
    std::sort(beads.begin(), beads.end());
    return MnEvaluator(mu).eval(std::move(beads), 0);
}

}  // namespace comaj
