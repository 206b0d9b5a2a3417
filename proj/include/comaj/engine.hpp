#pragma once

// Generalized descents over lists of integer sequences, the Z labeling
// operators and their chains, reading orders, the first-coordinate
// injections phi_{n-i}, tau_R, and the labeled tableaux P_{T, sigma-vector}.
//
// Coordinate 1 of every sequence is always the most recently prepended
// label. Only weight() maps coordinates onto variables.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "comaj/perm.hpp"
#include "comaj/qpoly.hpp"

namespace comaj {

using Entry = std::uint32_t;

/// A list (s^1, ..., s^n) of sequences in N^r, stored row-major.
/// r = 0 is allowed; all sequences then compare equal.
class SeqList {
public:
    SeqList() = default;

    /// n all-zero sequences of length r.
    SeqList(int n, int r);

    /// Throws std::invalid_argument if the sequences have different lengths.
    explicit SeqList(const std::vector<std::vector<Entry>>& seqs);

    static SeqList empty(int n) { return SeqList(n, 0); }

    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }

    /// s^i, 1-based.
    std::span<const Entry> seq(int i) const noexcept
    {
        return {data_.data() + static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(r_),
                static_cast<std::size_t>(r_)};
    }

    /// s^i_c, both 1-based.
    Entry at(int i, int c) const noexcept { return data_[index(i, c)]; }
    Entry& at(int i, int c) noexcept { return data_[index(i, c)]; }

    /// Z^{(from)}: every sequence with its first from-1 coordinates removed.
    SeqList drop_leading(int count) const;

    /// Sum of coordinate c over all sequences.
    std::uint64_t coordinate_sum(int c) const noexcept;

    std::span<const Entry> raw() const noexcept { return data_; }

    bool operator==(const SeqList&) const = default;

private:
    std::size_t index(int i, int c) const noexcept
    {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(r_) +
               static_cast<std::size_t>(c - 1);
    }

    int n_ = 0;
    int r_ = 0;
    std::vector<Entry> data_;
};

/// "(0020,3312,...)" when every entry is a single digit, otherwise each
/// sequence is bracketed: "([10,2],[0,1])".
std::string to_string(const SeqList& s);

/// (sigma^1, ..., sigma^{k-1}); the closing sigma^k = identity is implicit.
class PermVector {
public:
    PermVector() = default;
    /// Throws std::invalid_argument if a permutation is not in S_n.
    PermVector(int n, std::vector<Permutation> perms);

    int n() const noexcept { return n_; }
    int k() const noexcept { return static_cast<int>(perms_.size()) + 1; }
    const std::vector<Permutation>& perms() const noexcept { return perms_; }

private:
    int n_ = 0;
    std::vector<Permutation> perms_;
};

/// Lexicographic comparison of equal-length tuples.
/// Throws std::invalid_argument on a length mismatch.
std::strong_ordering lex_cmp(std::span<const Entry> a, std::span<const Entry> b);

/// i ~_R j: every index from min(i,j) up to max(i,j)-1 lies in R.
/// Throws std::invalid_argument unless 1 <= i, j <= n.
bool r_neighbors(const DescentSet& R, int i, int j);

/// Des_{R,S}(sigma). Throws std::invalid_argument on a size mismatch.
DescentSet gen_des(const DescentSet& R, const SeqList& S, const Permutation& sigma);

/// Comaj_{R,S}(sigma) = sum over Des_{R,S}(sigma) of (n - i).
std::int64_t gen_comaj(const DescentSet& R, const SeqList& S, const Permutation& sigma);

/// Z_{R,sigma}(S): prepends to each s^i the number of descents read before it.
SeqList z_step(const DescentSet& R, const Permutation& sigma, const SeqList& S);

/// Z_{R,sigma^{k-1}} ... Z_{R,sigma^1}(empty), followed by Z_{R,identity}
/// when append_identity is set.
SeqList z_chain(const DescentSet& R, const PermVector& sigmas, bool append_identity);

/// comaj^i_T(sigma-vector) for i = 1..k.
std::vector<std::int64_t> comaj_components(const StandardTableau& T, const PermVector& sigmas);

/// Same statistic for an arbitrary R in place of des(T).
std::vector<std::int64_t> comaj_components(const DescentSet& R, const PermVector& sigmas);

std::int64_t comaj_total(const StandardTableau& T, const PermVector& sigmas);

/// sigma_R(S): indices read in increasing lex order of s^i; equal sequences
/// s^i = s^j are read i first when i < j and i !~_R j, or i > j and i ~_R j.
Permutation reading_order(const DescentSet& R, const SeqList& S);

/// phi_{n-i}: adds 1 to the first coordinate of s^{sigma_j} for every j > i.
/// Requires reading_order(R, S) == sigma and 0 <= i <= n-1; the reading-order
/// check runs when COMAJ_VALIDATE_PRECONDITIONS is set.
/// Throws std::invalid_argument on a violated precondition or r = 0.
SeqList phi(const DescentSet& R, const Permutation& sigma, int i, const SeqList& S);

/// The unique permutation with Comaj_{R,empty} = 0: maximal R-runs of
/// {1..n}, each written decreasingly, runs in increasing order.
Permutation tau_r(const DescentSet& R, int n);

/// Exponents of q^S: q_i carries coordinate r-i+1; q_{r+1}..q_k get 0.
/// Throws std::invalid_argument if r > k.
ExponentVector weight(const SeqList& S, int k);

/// P_{T, sigma-vector}: entry i of T replaced by z^i, z = Z^k_{des T}.
struct LabeledTableau {
    Partition shape;
    StandardTableau base;
    SeqList filling;

    /// The sequence in row `row` (0 = bottom), column `col`.
    std::span<const Entry> cell(int row, int col) const;
};

LabeledTableau labeled_tableau(const StandardTableau& T, const PermVector& sigmas);

}  // namespace comaj
