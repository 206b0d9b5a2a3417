#include "doctest.h"

#include <map>
#include <set>

#include <gmpxx.h>

#include "comaj/parse.hpp"
#include "comaj/perm.hpp"

using namespace comaj;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

}  // namespace

TEST_CASE("permutation construction and validation")
{
    CHECK(P("231").size() == 3);
    CHECK(P("231")(1) == 2);
    CHECK(Permutation::identity(4).is_identity());
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
    CHECK(to_string(P("473912586")) == "473912586");
    CHECK(to_string(Permutation({10, 1, 2, 3, 4, 5, 6, 7, 8, 9})) == "10,1,2,3,4,5,6,7,8,9");
}

TEST_CASE("des and comaj of permutations")
{
    CHECK(des(P("473912586")) == DescentSet(9, {2, 4, 8}));
    CHECK(comaj::comaj(P("473912586")) == 13);
    CHECK(des(Permutation::identity(6)).empty());
    CHECK(comaj::comaj(Permutation::identity(6)) == 0);
    CHECK(des(P("63482715")) == DescentSet(8, {1, 4, 6}));
    CHECK(comaj::comaj(P("63482715")) == 13);
}

TEST_CASE("comaj range and unique maximum")
{
    for (int n = 1; n <= 6; ++n) {
        const std::int64_t top = n * (n - 1) / 2;
        int at_max = 0;
        for (const auto& s : all_permutations(n)) {
            std::int64_t sum = 0;
            for (int i : des(s).elems())
                sum += n - i;
            CHECK(comaj::comaj(s) == sum);
            CHECK(comaj::comaj(s) >= 0);
            CHECK(comaj::comaj(s) <= top);
            if (comaj::comaj(s) == top) {
                ++at_max;
                for (int i = 1; i <= n; ++i)
                    CHECK(s(i) == n + 1 - i);
            }
        }
        CHECK(at_max == 1);
    }
}

TEST_CASE("compose and inverse")
{
    const auto s = P("63482715");
    CHECK(inverse(s) == P("75238164"));
    CHECK(compose(s, Permutation::identity(8)) == s);
    CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
    CHECK(compose(P("231"), P("213")) == P("321"));
    for (const auto& p : all_permutations(4))
        CHECK(compose(p, inverse(p)).is_identity());
    CHECK_THROWS_AS(compose(P("12"), P("123")), std::invalid_argument);
}

TEST_CASE("all_permutations is lexicographic and complete")
{
    const auto all = all_permutations(4);
    CHECK(all.size() == 24);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1] < all[i]);
    CHECK(all_permutations(0).size() == 1);
}

TEST_CASE("partition validation and helpers")
{
    CHECK(Partition({4, 2, 1}).size() == 7);
    CHECK(Partition({4, 2, 1}).length() == 3);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(to_string(Partition({4, 2, 1})) == "4,2,1");
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    CHECK(centralizer_size(Partition({2, 1, 1})) == 4);
    CHECK(centralizer_size(Partition({3})) == 3);
    CHECK(factorial(5) == 120);
}

TEST_CASE("descent sets")
{
    DescentSet d(7, {2, 5, 6});
    CHECK(to_string(d) == "{2,5,6}");
    CHECK(d.count() == 3);
    CHECK(d.comaj_weight() == 5 + 2 + 1);
    CHECK(d.contains(5));
    CHECK_FALSE(d.contains(3));
    CHECK_THROWS_AS(DescentSet(3, {3}), std::invalid_argument);
    CHECK_THROWS_AS(DescentSet(3, {0}), std::invalid_argument);
    CHECK(all_subsets(4).size() == 8);
    CHECK(DescentSet::full(4) == DescentSet(4, {1, 2, 3}));
}

TEST_CASE("tableau descents")
{
    const StandardTableau T({{1, 2, 4, 5}, {3, 6}, {7}});
    CHECK(des(T) == DescentSet(7, {2, 5, 6}));
    CHECK(comaj::comaj(T) == 8);  // labels 0,0,1,1,1,2,3
    CHECK(to_string(T) == "1,2,4,5/3,6/7");

    const StandardTableau U({{1, 3}, {2, 4}, {5}, {6}});
    CHECK(des(U) == DescentSet(6, {1, 3, 4, 5}));

    CHECK(des(StandardTableau({{1, 2, 3, 4}})).empty());
    CHECK(comaj::comaj(StandardTableau({{1, 2}, {3}})) == 1);
    CHECK(des(StandardTableau({{1}, {2}, {3}, {4}})) == DescentSet::full(4));

    CHECK_THROWS_AS(StandardTableau({{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau({{1, 2}, {3, 4, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau({{1, 3}, {4, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau({{1, 2}, {2}}), std::invalid_argument);
}

TEST_CASE("SYT enumeration matches the hook-length formula")
{
    CHECK(enumerate_syt(Partition({3})).size() == 1);
    CHECK(enumerate_syt(Partition({2, 1})).size() == 2);
    CHECK(enumerate_syt(Partition({2, 2})).size() == 2);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto tableaux = enumerate_syt(lambda);
            CHECK(mpz_class(static_cast<unsigned long>(tableaux.size())) == syt_count(lambda));
            std::set<StandardTableau> unique(tableaux.begin(), tableaux.end());
            CHECK(unique.size() == tableaux.size());
            for (std::size_t i = 1; i < tableaux.size(); ++i)
                CHECK(tableaux[i - 1].reading_word() < tableaux[i].reading_word());
            for (const auto& T : tableaux)
                CHECK(T.shape() == lambda);
        }
    }
}

TEST_CASE("cycle type")
{
    CHECK(cycle_type(P("23416758")) == Partition({4, 3, 1}));
    CHECK(cycle_type(Permutation::identity(3)) == Partition({1, 1, 1}));
    CHECK(cycle_type(P("21")) == Partition({2}));
}

TEST_CASE("Murnaghan-Nakayama characters")
{
    for (const auto& mu : partitions_of(5))
        CHECK(mn_character(Partition({5}), mu) == 1);
    CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(mn_character(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(mn_character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
    CHECK_THROWS_AS(mn_character(Partition({2}), Partition({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("character table orthogonality and dimensions")
{
    for (int n = 1; n <= 6; ++n) {
        const auto parts = partitions_of(n);
        const mpz_class nfact = factorial(n);
        for (const auto& lambda : parts) {
            CHECK(mpz_class(static_cast<long>(mn_character(lambda, Partition(std::vector<int>(n, 1))))) ==
                  syt_count(lambda));
            for (const auto& nu : parts) {
                mpq_class sum = 0;
                for (const auto& mu : parts)
                    sum += mpq_class(mn_character(lambda, mu) * mn_character(nu, mu)) /
                           mpq_class(centralizer_size(mu));
                CHECK(sum == mpq_class(lambda == nu ? 1 : 0));
            }
        }
        // Column orthogonality against the regular character.
        for (const auto& mu : parts) {
            mpz_class col = 0;
            for (const auto& lambda : parts)
                col += syt_count(lambda) * mn_character(lambda, mu);
            const bool identity_class = mu.length() == n;
            CHECK(col == (identity_class ? nfact : mpz_class(0)));
        }
    }
}

TEST_CASE("MN characters agree with class functions computed by brute force for S_4")
{
    // chi^{(n-1,1)} = fixed points - 1.
    for (const auto& s : all_permutations(4)) {
        int fixed = 0;
        for (int i = 1; i <= 4; ++i)
            fixed += s(i) == i;
        CHECK(mn_character(Partition({3, 1}), cycle_type(s)) == fixed - 1);
    }
    // Sign character.
    for (const auto& s : all_permutations(5)) {
        const auto ct = cycle_type(s);
        int even_cycles = 0;
        for (int p : ct.parts())
            even_cycles += (p % 2 == 0);
        CHECK(mn_character(Partition({1, 1, 1, 1, 1}), ct) == (even_cycles % 2 == 0 ? 1 : -1));
    }
}
