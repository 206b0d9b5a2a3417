#pragma once

// Permutations, partitions, standard tableaux and the classical descent
// statistics on them, plus the symmetric-group character values used by the
// character-theoretic oracle.
//
// Indexing follows the mathematics: positions and values are 1-based.

#include <compare>
#include <initializer_list>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace comaj {

/// A permutation of {1..n} in one-line notation: sigma(i) = word[i-1].
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `word` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(word_.size()); }

    /// sigma_i, 1-based.
    int operator()(int i) const noexcept { return word_[static_cast<std::size_t>(i - 1)]; }

    std::span<const int> word() const noexcept { return word_; }

    bool is_identity() const noexcept;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

/// (a ∘ b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

/// All permutations of S_n in lexicographic order of their words.
std::vector<Permutation> all_permutations(int n);

/// Digit string when n <= 9, comma list otherwise.
std::string to_string(const Permutation& p);

/// A weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument for non-positive or increasing parts.
    explicit Partition(std::vector<int> parts);

    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int operator[](int i) const noexcept { return parts_[static_cast<std::size_t>(i)]; }
    std::span<const int> parts() const noexcept { return parts_; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Comma list, e.g. "4,2,1".
std::string to_string(const Partition& p);

/// All partitions of n, in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

/// Number of standard tableaux of the shape, by the hook-length formula.
mpz_class syt_count(const Partition& shape);

/// Centralizer order z_mu = prod mu_i * prod m_j!.
mpz_class centralizer_size(const Partition& cycle_type);

mpz_class factorial(int n);

/// A subset of {1..n-1}, stored as a bitmask (bit i <=> i in the set).
class DescentSet {
public:
    static constexpr int max_size = 64;

    DescentSet() = default;
    explicit DescentSet(int n);

    /// Throws std::invalid_argument for elements outside [1, n-1].
    DescentSet(int n, std::span<const int> elems);
    DescentSet(int n, std::initializer_list<int> elems)
        : DescentSet(n, std::span<const int>(elems.begin(), elems.size())) {}

    static DescentSet from_mask(int n, std::uint64_t mask);

    /// {1, ..., n-1}.
    static DescentSet full(int n);

    int n() const noexcept { return n_; }
    std::uint64_t mask() const noexcept { return mask_; }
    bool contains(int i) const noexcept { return i >= 1 && i < 64 && ((mask_ >> i) & 1U) != 0; }
    bool empty() const noexcept { return mask_ == 0; }
    int count() const noexcept;
    std::vector<int> elems() const;

    void insert(int i);

    /// Sum of (n - i) over the elements.
    std::int64_t comaj_weight() const noexcept;

    bool operator==(const DescentSet&) const = default;

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

/// "{2,5,6}".
std::string to_string(const DescentSet& d);

/// Every subset of {1..n-1}, ordered by bitmask.
std::vector<DescentSet> all_subsets(int n);

/// A standard Young tableau drawn in French convention: rows()[0] is the
/// bottom (longest) row. Rows increase to the right, columns increase upward.
class StandardTableau {
public:
    StandardTableau() = default;

    /// Throws std::invalid_argument if the filling is not standard.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const noexcept { return shape_; }
    int size() const noexcept { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

    /// Row index (0 = bottom) holding the entry v.
    int row_of(int v) const noexcept { return row_of_[static_cast<std::size_t>(v - 1)]; }

    /// Rows concatenated bottom to top.
    std::vector<int> reading_word() const;

    auto operator<=>(const StandardTableau& other) const { return rows_ <=> other.rows_; }
    bool operator==(const StandardTableau& other) const { return rows_ == other.rows_; }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_;
};

/// "1,2,4,5/3,6/7".
std::string to_string(const StandardTableau& t);

/// { i : sigma_i > sigma_{i+1} }
DescentSet des(const Permutation& p);
std::int64_t comaj(const Permutation& p);

/// { i : i+1 sits in a strictly higher row than i }
DescentSet des(const StandardTableau& t);
std::int64_t comaj(const StandardTableau& t);

/// All SYT of the shape, ordered lexicographically by reading word.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

Partition cycle_type(const Permutation& p);

/// Irreducible character chi^lambda evaluated on the class mu, by the
/// Murnaghan-Nakayama rule. Throws std::invalid_argument if |lambda| != |mu|.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

}  // namespace comaj
