#include <doctest.h>

#include <map>

#include "weylcalc/tensor.hpp"

using namespace weylcalc;

namespace {

Partition shape(std::vector<int> parts) {
    return Partition(std::move(parts));
}

TensorVector basis(int n, std::vector<int> tuple) {
    return TensorVector::basis(n, tuple);
}

// Rank of a family of tensors, by elimination over their joint support.
long long tensor_rank(const std::vector<TensorVector>& family) {
    std::map<TensorVector::IndexTuple, std::size_t> cols;
    for (const TensorVector& v : family) {
        for (const auto& [t, c] : v.coefficients()) cols.try_emplace(t, cols.size());
    }
    std::vector<std::vector<Rat>> rows;
    for (const TensorVector& v : family) {
        std::vector<Rat> row(cols.size(), Rat(0));
        for (const auto& [t, c] : v.coefficients()) {
            REQUIRE(c.is_real());
            row[cols[t]] = c.re;
        }
        rows.push_back(std::move(row));
    }
    long long rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols.size() && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[pivot_row][col];
            for (std::size_t j = col; j < cols.size(); ++j) rows[r][j] -= f * rows[pivot_row][j];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("partition enumeration") {
    auto p3 = partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == shape({3}));
    CHECK(p3[1] == shape({2, 1}));
    CHECK(p3[2] == shape({1, 1, 1}));

    CHECK(partitions(0).size() == 1);
    CHECK(partitions(0)[0].empty());
    CHECK(partitions(4).size() == 5);
}

TEST_CASE("hook formulas") {
    CHECK(standard_tableaux_count(shape({2, 1})) == 2);
    CHECK(standard_tableaux_count(shape({3, 1})) == 3);
    CHECK(standard_tableaux_count(shape({2, 2})) == 2);
    CHECK(semistandard_tableaux_count(shape({2}), 2) == 3);
    CHECK(semistandard_tableaux_count(shape({1, 1}), 2) == 1);
    CHECK(semistandard_tableaux_count(shape({1, 1, 1}), 2) == 0);
    CHECK(semistandard_tableaux_count(shape({2, 1}), 3) == 8);
}

TEST_CASE("characters by border strips agree with the hook formula at the identity") {
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> ones(k, 1);
        for (const Partition& lambda : partitions(k)) {
            CHECK(character_value(lambda, Partition(ones)) == standard_tableaux_count(lambda));
        }
    }
    // A few known character values for S_3 and S_4.
    CHECK(character_value(shape({2, 1}), shape({3})) == -1);
    CHECK(character_value(shape({2, 1}), shape({2, 1})) == 0);
    CHECK(character_value(shape({2, 2}), shape({2, 2})) == 2);
    CHECK(character_value(shape({3, 1}), shape({4})) == -1);
}

TEST_CASE("young symmetrizers of the small shapes") {
    SUBCASE("single row: symmetrizer") {
        Tableau t = Tableau::row_canonical(shape({2}));
        GroupAlgebraElement s = young_symmetrizer(t);
        GroupAlgebraElement expected(2);
        expected.add_term(Perm::identity(2), Rat(1));
        expected.add_term(Perm::transposition(2, 0, 1), Rat(1));
        CHECK(s == expected);
    }
    SUBCASE("single column: antisymmetrizer") {
        Tableau t = Tableau::row_canonical(shape({1, 1}));
        GroupAlgebraElement s = young_symmetrizer(t);
        GroupAlgebraElement expected(2);
        expected.add_term(Perm::identity(2), Rat(1));
        expected.add_term(Perm::transposition(2, 0, 1), Rat(-1));
        CHECK(s == expected);
    }
    SUBCASE("hook (2,1): quasi-idempotent with the k!/dim scalar") {
        Tableau t = Tableau::row_canonical(shape({2, 1}));
        GroupAlgebraElement s = young_symmetrizer(t);
        GroupAlgebraElement s2 = s * s;
        // s^2 = c s for some nonzero rational c; c should come out as 3.
        Perm id = Perm::identity(3);
        Rat c = s2.coefficient(id) / s.coefficient(id);
        CHECK(c == 3);
        CHECK(s2 == s.scaled(c));
    }
}

TEST_CASE("place permutation action") {
    TensorVector v = basis(2, {0, 1});
    SUBCASE("identity acts as identity") {
        CHECK(act_on_tensor(GroupAlgebraElement::unit(2), v) == v);
    }
    SUBCASE("transposition swaps the slots") {
        CHECK(permute_tensor(Perm::transposition(2, 0, 1), v) == basis(2, {1, 0}));
    }
    SUBCASE("antisymmetrizer kills the diagonal") {
        GroupAlgebraElement anti(2);
        anti.add_term(Perm::identity(2), Rat(1));
        anti.add_term(Perm::transposition(2, 0, 1), Rat(-1));
        CHECK(act_on_tensor(anti, basis(2, {0, 0})).is_zero());
    }
}

TEST_CASE("highest weight vectors") {
    SUBCASE("(2): symmetric square") {
        TensorVector v = highest_weight_vector(shape({2}), 2);
        CHECK(v == basis(2, {0, 0}));
    }
    SUBCASE("(1,1): alternating square") {
        TensorVector v = highest_weight_vector(shape({1, 1}), 2);
        CHECK(v == basis(2, {0, 1}) - basis(2, {1, 0}));
    }
    SUBCASE("(2,1) in dimension 3: weight (2,1,0)") {
        TensorVector v = highest_weight_vector(shape({2, 1}), 3);
        CHECK_FALSE(v.is_zero());
        for (const auto& [t, c] : v.coefficients()) {
            CHECK(TensorVector::content(t, 3) == std::vector<int>{2, 1, 0});
        }
    }
    SUBCASE("too many parts") {
        CHECK_THROWS_AS(highest_weight_vector(shape({1, 1, 1}), 2), std::invalid_argument);
    }
}

TEST_CASE("isotypic projectors") {
    SUBCASE("k = 2: half sum and half difference") {
        GroupAlgebraElement p2 = isotypic_projector(shape({2}), 2);
        CHECK(p2.coefficient(Perm::identity(2)) == Rat(1, 2));
        CHECK(p2.coefficient(Perm::transposition(2, 0, 1)) == Rat(1, 2));
        GroupAlgebraElement p11 = isotypic_projector(shape({1, 1}), 2);
        CHECK(p11.coefficient(Perm::transposition(2, 0, 1)) == Rat(-1, 2));
    }
    SUBCASE("projectors sum to the identity for k = 3") {
        GroupAlgebraElement sum(3);
        for (const Partition& lambda : partitions(3)) {
            sum = sum + isotypic_projector(lambda, 3);
        }
        CHECK(sum == GroupAlgebraElement::unit(3));
    }
    SUBCASE("P_(2,1) is idempotent and orthogonal to the others") {
        GroupAlgebraElement p = isotypic_projector(shape({2, 1}), 3);
        CHECK(p * p == p);
        GroupAlgebraElement q = isotypic_projector(shape({3}), 3);
        CHECK((p * q).is_zero());
    }
}

TEST_CASE("Schur-Weyl decomposition dimension tables") {
    SUBCASE("n = 2, k = 2") {
        auto comps = schur_weyl_decompose(2, 2);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].partition == shape({2}));
        CHECK(comps[0].dim_schur == 3);
        CHECK(comps[0].dim_specht == 1);
        CHECK(comps[1].partition == shape({1, 1}));
        CHECK(comps[1].dim_schur == 1);
        CHECK(comps[1].dim_specht == 1);
    }
    SUBCASE("n = 2, k = 3") {
        auto comps = schur_weyl_decompose(2, 3);
        REQUIRE(comps.size() == 3);
        CHECK(comps[0].dim_schur == 4);
        CHECK(comps[0].dim_specht == 1);
        CHECK(comps[1].dim_schur == 2);
        CHECK(comps[1].dim_specht == 2);
        CHECK(comps[2].dim_schur == 0);
        CHECK(comps[2].dim_specht == 1);
        long long sum = 0;
        for (const auto& c : comps) sum += c.dim_schur * c.dim_specht;
        CHECK(sum == 8);
    }
    SUBCASE("n = 1, k = 3: only the row survives") {
        auto comps = schur_weyl_decompose(1, 3);
        CHECK(comps[0].dim_schur == 1);
        CHECK(comps[0].dim_specht == 1);
        for (std::size_t i = 1; i < comps.size(); ++i) CHECK(comps[i].dim_schur == 0);
    }
    SUBCASE("resource cap") {
        CHECK_THROWS_AS(schur_weyl_decompose(4, 7), ResourceLimitError);
    }
}

TEST_CASE("weight multisets of Schur modules") {
    SUBCASE("Sym^2 of C^2") {
        auto wm = weight_multiset(shape({2}), 2);
        REQUIRE(wm.size() == 3);
        CHECK(wm.at(Weight::from_values({2, 0})) == 1);
        CHECK(wm.at(Weight::from_values({1, 1})) == 1);
        CHECK(wm.at(Weight::from_values({0, 2})) == 1);
    }
    SUBCASE("Lambda^2 of C^2") {
        auto wm = weight_multiset(shape({1, 1}), 2);
        REQUIRE(wm.size() == 1);
        CHECK(wm.at(Weight::from_values({1, 1})) == 1);
    }
    SUBCASE("(2,1) over C^2") {
        auto wm = weight_multiset(shape({2, 1}), 2);
        REQUIRE(wm.size() == 2);
        CHECK(wm.at(Weight::from_values({2, 1})) == 1);
        CHECK(wm.at(Weight::from_values({1, 2})) == 1);
    }
    SUBCASE("multiplicities sum to the Schur dimension") {
        auto wm = weight_multiset(shape({2, 1}), 3);
        long long sum = 0;
        for (const auto& [alpha, m] : wm) sum += m;
        CHECK(sum == semistandard_tableaux_count(shape({2, 1}), 3));
    }
}

TEST_CASE("independent dimension route: rank of the symmetrizer ideal") {
    // dim of the left ideal Q[S_k] s(T) equals the number of standard
    // tableaux; checked for k <= 4 as a second, projector-free route.
    for (int k = 2; k <= 4; ++k) {
        std::vector<Perm> group = symmetric_group(k);
        std::map<Perm, std::size_t> index;
        for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;
        for (const Partition& lambda : partitions(k)) {
            GroupAlgebraElement s = young_symmetrizer(Tableau::row_canonical(lambda));
            std::vector<std::vector<Rat>> rows;
            for (const Perm& g : group) {
                std::vector<Rat> row(group.size(), Rat(0));
                for (const auto& [p, c] : s.terms()) row[index[g.compose(p)]] = c;
                rows.push_back(std::move(row));
            }
            // Reuse the tensor_rank elimination through a quick local rank.
            long long rank = 0;
            std::size_t pivot_row = 0;
            for (std::size_t col = 0; col < group.size() && pivot_row < rows.size(); ++col) {
                std::size_t sel = pivot_row;
                while (sel < rows.size() && rows[sel][col] == 0) ++sel;
                if (sel == rows.size()) continue;
                std::swap(rows[pivot_row], rows[sel]);
                for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                    if (rows[r][col] == 0) continue;
                    Rat f = rows[r][col] / rows[pivot_row][col];
                    for (std::size_t j = col; j < group.size(); ++j) {
                        rows[r][j] -= f * rows[pivot_row][j];
                    }
                }
                ++pivot_row;
                ++rank;
            }
            CHECK(rank == standard_tableaux_count(lambda));
        }
    }
}

TEST_CASE("span of c(T) e_T over all tableaux has the Specht dimension") {
    for (int k = 2; k <= 4; ++k) {
        int n = k;  // needs n >= k
        for (const Partition& lambda : partitions(k)) {
            Tableau canonical = Tableau::row_canonical(lambda);
            std::vector<TensorVector> family;
            for (const Perm& sigma : symmetric_group(k)) {
                // Relabel the canonical filling through sigma.
                std::vector<std::vector<int>> rows = canonical.rows();
                for (auto& row : rows) {
                    for (int& e : row) e = sigma(e);
                }
                Tableau t(lambda, rows);
                TensorVector e_t = TensorVector::basis(n, t.row_of_entry());
                family.push_back(act_on_tensor(column_antisymmetrizer(t), e_t));
            }
            CHECK(tensor_rank(family) == standard_tableaux_count(lambda));
        }
    }
}
