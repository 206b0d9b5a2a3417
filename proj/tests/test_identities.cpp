#include "doctest.h"

#include <map>

#include "comaj/engine.hpp"
#include "comaj/identities.hpp"
#include "comaj/parse.hpp"
#include "comaj/qpoly_io.hpp"

using namespace comaj;

namespace {

QPoly single(int D, std::initializer_list<std::pair<std::uint32_t, long>> terms)
{
    QPoly p(Truncation(1, D));
    for (const auto& [d, c] : terms)
        p.add_term({d}, c);
    return p;
}

// Enumerates every S in (N^k)^n of total degree <= D and keeps those read in order.
QPoly brute_force_fundamental(const DescentSet& R, int n, Truncation t)
{
    QPoly out(t);
    SeqList S(n, t.k);
    const int cells = n * t.k;
    auto rec = [&](auto&& self, int cell, int budget) -> void {
        if (cell == cells) {
            if (reading_order(R, S).is_identity()) {
                ExponentVector e(static_cast<std::size_t>(t.k));
                for (int v = 1; v <= t.k; ++v)
                    e[static_cast<std::size_t>(v - 1)] = static_cast<std::uint32_t>(S.coordinate_sum(t.k - v + 1));
                out.add_term(e, 1);
            }
            return;
        }
        for (int x = 0; x <= budget; ++x) {
            S.at(cell / t.k + 1, cell % t.k + 1) = static_cast<Entry>(x);
            self(self, cell + 1, budget - x);
        }
        S.at(cell / t.k + 1, cell % t.k + 1) = 0;
    };
    rec(rec, 0, t.degree);
    return out;
}

}  // namespace

TEST_CASE("schur comaj formula examples")
{
    CHECK(schur_comaj_formula(Partition({1}), 3) == QPoly::one(Truncation(3, 0)));
    CHECK(schur_comaj_formula(Partition({2, 1}), 1) == single(3, {{1, 1}, {2, 1}}));
    for (int n = 1; n <= 4; ++n) {
        QPoly pairs = inverse_pair_sum(n);
        CHECK(schur_comaj_formula(Partition({n}), 2) == pairs);
    }
}

TEST_CASE("fundamental comaj formula examples")
{
    CHECK(fundamental_comaj_formula(DescentSet(3), 3, 1) == QPoly::one(Truncation(1, 3)));
    CHECK(fundamental_comaj_formula(DescentSet(2, {1}), 2, 1) == single(1, {{1, 1}}));
    const QPoly mid = fundamental_comaj_formula(DescentSet(5, {2, 4}), 5, 3);
    CHECK(mid.coefficient_sum() == 120 * 120);
    CHECK_THROWS_AS(fundamental_comaj_formula(DescentSet(3), 4, 1), std::invalid_argument);
}

TEST_CASE("fundamental enumeration examples and brute force")
{
    for (int n = 1; n <= 4; ++n) {
        const Truncation t(1, 8);
        CHECK(pochhammer_qq(1, n, t) * fundamental_principal_enum(DescentSet(n), n, 1, t) == QPoly::one(t));
    }
    const Truncation t6(1, 6);
    CHECK(pochhammer_qq(1, 2, t6) * fundamental_principal_enum(DescentSet(2, {1}), 2, 1, t6) == single(6, {{1, 1}}));
    QPoly all(Truncation(2, 2));
    for (ExponentVector e : {ExponentVector{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}})
        all.add_term(e, 1);
    CHECK(fundamental_principal_enum(DescentSet(1), 1, 2, Truncation(2, 2)) == all);

    // The chain sweep agrees with filtering every list through reading_order.
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 2; ++k)
            for (const auto& R : all_subsets(n)) {
                const Truncation t(k, 5);
                CHECK(fundamental_principal_enum(R, n, k, t) == brute_force_fundamental(R, n, t));
            }
    CHECK_THROWS_AS(fundamental_principal_enum(DescentSet(2), 2, 2, Truncation(1, 3)), std::invalid_argument);
}

TEST_CASE("semistandard enumeration examples")
{
    CHECK(schur_principal_tableaux(Partition({1}), 1, Truncation(1, 3)) == single(3, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    CHECK(schur_principal_tableaux(Partition({1, 1}), 1, Truncation(1, 4)) == single(4, {{1, 1}, {2, 1}, {3, 2}, {4, 2}}));
    for (int k = 1; k <= 2; ++k) {
        const Truncation t(k, 7);
        for (int n = 1; n <= 4; ++n)
            for (const auto& lambda : partitions_of(n))
                CHECK(schur_principal_tableaux(lambda, k, t) == schur_principal_jt(lambda, t));
    }
}

TEST_CASE("graded multiplicities in Kronecker powers")
{
    CHECK(harmonics_multiplicity_comaj(Partition({3}), 1) == single(3, {{0, 1}}));
    CHECK(harmonics_multiplicity_comaj(Partition({2}), 2) == single(2, {{0, 1}, {2, 1}}));
    CHECK(harmonics_multiplicity_comaj(Partition({2, 1}), 1) == single(3, {{1, 1}, {2, 1}}));

    CHECK(harmonics_multiplicity_character(Partition({4}), 1, Truncation(1, 6)) == single(6, {{0, 1}}));
    CHECK(harmonics_multiplicity_character(Partition({2}), 2, Truncation(1, 2)) == single(2, {{0, 1}, {2, 1}}));
    CHECK(harmonics_multiplicity_character(Partition({1, 1}), 2, Truncation(1, 2)) == single(2, {{1, 2}}));
    CHECK_THROWS_AS(harmonics_multiplicity_character(Partition({2, 1}), 2, Truncation(1, 5)), std::invalid_argument);
    CHECK_THROWS_AS(harmonics_multiplicity_character(Partition({2}), 1, Truncation(2, 5)), std::invalid_argument);

    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 3; ++k) {
            mpz_class total = 0;
            for (const auto& lambda : partitions_of(n)) {
                const QPoly m = harmonics_multiplicity_comaj(lambda, k);
                total += syt_count(lambda) * m.coefficient_sum();
                if (k == 1) {
                    QPoly fake(Truncation(1, exact_degree_bound(n, 1)));
                    for (const auto& T : enumerate_syt(lambda))
                        fake.add_term({static_cast<std::uint32_t>(comaj::comaj(T))}, 1);
                    CHECK(m == fake);
                    CHECK(m.coefficient_sum() == syt_count(lambda));
                }
            }
            mpz_class expected = 1;
            for (int i = 0; i < k; ++i)
                expected *= factorial(n);
            CHECK(total == expected);
        }
    }
}

TEST_CASE("schur numerator is a sum of fundamental numerators")
{
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 3; ++k) {
            if (n == 4 && k == 3)
                continue;
            for (const auto& lambda : partitions_of(n)) {
                QPoly sum(Truncation(k, exact_degree_bound(n, k)));
                for (const auto& T : enumerate_syt(lambda))
                    sum += fundamental_comaj_formula(des(T), n, k);
                CHECK(sum == schur_comaj_formula(lambda, k));
            }
        }
    }
}

TEST_CASE("schur numerator is symmetric in q_1..q_k")
{
    for (const auto& lambda : {Partition({2, 1}), Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})}) {
        const QPoly p = schur_comaj_formula(lambda, 3);
        for (const auto& perm : all_permutations(3))
            CHECK(permute_variables(p, perm) == p);
    }
}

TEST_CASE("product-identity tuples are a weight-preserving image of free tuples")
{
    // (pi^1..pi^{k-1}) -> sigma^1 = pi^1, sigma^i = (pi^{i-1})^{-1} pi^i, sigma^k = (pi^{k-1})^{-1}.
    for (int n = 1; n <= 4; ++n) {
        for (int k = 2; k <= 3; ++k) {
            const auto all = all_permutations(n);
            std::map<std::vector<Permutation>, int> hits;
            QPoly mapped(Truncation(k, exact_degree_bound(n, k)));
            auto visit = [&](const std::vector<Permutation>& pis) {
                std::vector<Permutation> sigmas;
                sigmas.push_back(pis[0]);
                for (std::size_t i = 1; i < pis.size(); ++i)
                    sigmas.push_back(compose(inverse(pis[i - 1]), pis[i]));
                sigmas.push_back(inverse(pis.back()));
                Permutation product = Permutation::identity(n);
                ExponentVector e;
                for (const auto& s : sigmas) {
                    product = compose(product, s);
                    e.push_back(static_cast<std::uint32_t>(comaj::comaj(s)));
                }
                CHECK(product.is_identity());
                ++hits[sigmas];
                mapped.add_term(e, 1);
            };
            if (k == 2) {
                for (const auto& a : all)
                    visit({a});
            } else {
                for (const auto& a : all)
                    for (const auto& b : all)
                        visit({a, b});
            }
            CHECK(hits.size() == (k == 2 ? all.size() : all.size() * all.size()));
            for (const auto& [tuple, count] : hits)
                CHECK(count == 1);
            CHECK(mapped == row_case_product_sum(n, k));
        }
    }
}

TEST_CASE("parallel reductions do not depend on the job count")
{
    const Partition lambda({2, 1, 1});
    const QPoly serial = schur_comaj_formula(lambda, 3, 1);
    for (unsigned jobs : {2U, 3U, 8U}) {
        CHECK(schur_comaj_formula(lambda, 3, jobs) == serial);
        CHECK(digest(tableaux_weight_sum(lambda, 3, jobs)) == digest(tableaux_weight_sum(lambda, 3, 1)));
    }
    CHECK(harmonics_multiplicity_comaj(Partition({3, 1}), 3, 4) == harmonics_multiplicity_comaj(Partition({3, 1}), 3, 1));
}

TEST_CASE("verification drivers")
{
    const auto finite = verify_theorem_finite(Partition({2, 1}), 2, Truncation(2, 8));
    CHECK(finite.passed);
    CHECK(finite.checks.size() == 3);
    CHECK(verify_theorem_finite(Partition({1}), 3, Truncation(3, 0)).passed);
    CHECK_THROWS_AS(verify_theorem_finite(Partition({2, 1}), 2, Truncation(2, 5)), std::invalid_argument);

    CHECK(verify_theorem_kronecker(Partition({2}), 2).passed);
    CHECK(verify_theorem_kronecker(Partition({1}), 5).passed);

    CHECK(verify_quasi(DescentSet(2), 2, 2, Truncation(2, 6)).passed);
    CHECK(verify_quasi(DescentSet(1), 1, 3, Truncation(3, 4)).passed);
    CHECK(verify_quasi(DescentSet(7, {2, 5, 6}), 7, 2, Truncation(2, 8)).passed);

    CHECK(verify_row_case(2, 2).passed);
    CHECK(verify_row_case(1, 3).passed);
    CHECK(verify_row_case(4, 3).passed);
    CHECK(row_case_product_sum(2, 2) == schur_comaj_formula(Partition({2}), 2));
    QPoly two(Truncation(2, 2));
    two.add_term({0, 0}, 1);
    two.add_term({1, 1}, 1);
    CHECK(row_case_product_sum(2, 2) == two);

    const auto small = verify_prop41(DescentSet(2), DescentSet(2), Permutation::identity(2), 1, 4);
    CHECK(small.passed);
    CHECK(verify_prop41(DescentSet(4, {2}), DescentSet(4, {2}), Permutation::identity(4), 1, 6).passed);
    CHECK(verify_prop41_sweep(3, 2, 4).passed);
    CHECK(verify_prop41_sweep(2, 1, 4).passed);
    CHECK_THROWS_AS(verify_prop41(DescentSet(2), DescentSet(2), Permutation::identity(2), 0, 4), std::invalid_argument);

    CHECK(verify_infinite_reindex(Partition({2}), 1).passed);
    CHECK(verify_infinite_reindex(Partition({1}), 3).passed);
    CHECK(verify_infinite_reindex(Partition({2, 1}), 2).passed);
    CHECK_THROWS_AS(verify_infinite_reindex(Partition({2}), 0), std::invalid_argument);
}

TEST_CASE("worked example tuple gives the same monomial on the comaj and tableau paths")
{
    // S_7^3 is too large to sum in a unit test; the contributing tuple is checked on both paths.
    const StandardTableau T({{1, 2, 4, 5}, {3, 6}, {7}});
    const PermVector v(7, {parse_permutation("3651274"), parse_permutation("6523417"), parse_permutation("1423567")});
    CHECK(weight(labeled_tableau(T, v).filling, 4) == ExponentVector{5, 6, 16, 4});
    const auto parts = comaj_components(T, v);
    CHECK(ExponentVector(parts.begin(), parts.end()) == ExponentVector{5, 6, 16, 4});
}

TEST_CASE("report serialization")
{
    auto report = verify_theorem_kronecker(Partition({2, 1}), 2);
    const auto j = to_json(report);
    CHECK(j["status"] == "pass");
    CHECK(j["identity"] == "kronecker");
    CHECK(j["params"]["lambda"] == "2,1");
    CHECK(j["counterexample"].is_null());
    CHECK(j["digests"]["comaj_path"] == j["digests"]["character_path"]);
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(to_json(report, true).contains("elapsed_ms"));

    report.passed = false;
    report.counterexample = Counterexample{"x", "left", "right", {1, 2}, "3", "4", nullptr};
    const auto f = to_json(report);
    CHECK(f["status"] == "fail");
    CHECK(f["counterexample"]["exponent"] == nlohmann::json::array({1, 2}));
    CHECK(f["counterexample"]["left_coeff"] == "3");
}

TEST_CASE("a wrong right-hand side is caught with the first differing monomial")
{
    const Truncation t(2, 6);
    const QPoly normalized = pochhammer_product(2, t) * fundamental_principal_enum(DescentSet(2), 2, 2, t);
    const QPoly wrong = fundamental_comaj_formula(DescentSet(2, {1}), 2, 2).restrict_degree(2);
    QPoly widened(t);
    for (const auto& [e, c] : wrong.terms())
        widened.add_term(e, c);
    const auto diff = first_difference(normalized, widened);
    REQUIRE(diff);
    CHECK(diff->exponent == ExponentVector{0, 0});
    CHECK(diff->left == 1);
    CHECK(diff->right == 0);
}
